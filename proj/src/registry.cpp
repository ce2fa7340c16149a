#include "matspace/registry.hpp"

#include "matspace/catalog.hpp"
#include "matspace/common.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace matspace {

namespace {

std::vector<unsigned> parse_uint_list(const std::string& text, const std::string& context) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw parse_error("bad number '" + item + "' in " + context);
        }
        if (used != item.size() || v > 255)
            throw parse_error("bad number '" + item + "' in " + context);
        out.push_back(static_cast<unsigned>(v));
    }
    if (out.empty()) throw parse_error("empty argument list in " + context);
    return out;
}

// "h3" -> 3; empty optional when the tail is not a plain number.
std::optional<unsigned> trailing_number(const std::string& name, size_t prefix_len) {
    if (name.size() <= prefix_len) return std::nullopt;
    unsigned v = 0;
    for (size_t i = prefix_len; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return std::nullopt;
        v = v * 10 + static_cast<unsigned>(name[i] - '0');
        if (v > 16) return std::nullopt;
    }
    return v;
}

Line line_from(const FieldTable& f, const std::string& args, const std::string& context) {
    std::vector<unsigned> nums = parse_uint_list(args, context);
    std::vector<Elem> v;
    for (unsigned x : nums) {
        if (x >= f.q()) throw parse_error("coordinate out of range in " + context);
        v.push_back(static_cast<Elem>(x));
    }
    return Line(f, v);
}

Subspace load_space_file(const FieldTable& f, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw value_error("unknown space name or unreadable file: " + path);
    std::vector<Matrix> gens;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        gens.push_back(Matrix::parse(f, line));
    }
    if (gens.empty()) throw parse_error("no generators in " + path);
    return Subspace::span_of(gens);
}

} // namespace

Subspace lookup_space(const FieldTable& f, const std::string& name) {
    if (name == "t2+") return catalog::upper_triangular(f, 2);
    if (name == "v1") return catalog::v1(f);
    if (name == "v2") return catalog::v2(f);
    if (name == "j3") return catalog::j3(f);
    if (name == "f") return catalog::f_space(f);
    if (name == "g") return catalog::g_space(f);

    size_t colon = name.find(':');
    if (colon != std::string::npos) {
        std::string head = name.substr(0, colon), args = name.substr(colon + 1);
        if (head == "m_d") return catalog::m_d(line_from(f, args, name));
        if (head == "m^d") return catalog::m_sup_d(line_from(f, args, name));
        if (head == "r") {
            std::vector<unsigned> st = parse_uint_list(args, name);
            if (st.size() != 2) throw parse_error("r takes two arguments: " + name);
            return catalog::r_st(f, 3, 3, st[0], st[1]);
        }
        return load_space_file(f, name);
    }

    if (auto n = trailing_number(name, 2); n && name.compare(0, 2, "sl") == 0)
        return catalog::sl(f, *n);
    if (auto n = trailing_number(name, 1); n && name[0] == 'h') return catalog::h_space(f, *n);
    if (auto n = trailing_number(name, 1); n && name[0] == 'm')
        return Subspace::full(f, *n, *n);

    return load_space_file(f, name);
}

SubspaceLinearMap load_map(const Subspace& domain, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw value_error("unreadable map file: " + path);
    std::vector<std::optional<Matrix>> images(domain.dim());
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error(path + ":" + std::to_string(lineno) + ": expected 'index: matrix'");
        unsigned long idx = 0;
        try {
            idx = std::stoul(line.substr(0, colon));
        } catch (const std::exception&) {
            throw parse_error(path + ":" + std::to_string(lineno) + ": bad basis index");
        }
        if (idx >= images.size())
            throw parse_error(path + ":" + std::to_string(lineno) + ": basis index out of range");
        if (images[idx])
            throw parse_error(path + ":" + std::to_string(lineno) + ": duplicate basis index");
        images[idx] = Matrix::parse(domain.field(), line.substr(colon + 1));
    }
    std::vector<Matrix> out;
    for (size_t i = 0; i < images.size(); ++i) {
        if (!images[i])
            throw parse_error(path + ": no image for basis index " + std::to_string(i));
        out.push_back(*images[i]);
    }
    Subspace codomain = out.empty()
                            ? Subspace::full(domain.field(), domain.ambient_rows(),
                                             domain.ambient_cols())
                            : Subspace::full(domain.field(), out[0].rows(), out[0].cols());
    return SubspaceLinearMap{domain, codomain, std::move(out)};
}

} // namespace matspace

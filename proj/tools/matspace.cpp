#include "CLI11.hpp"

#include "matspace/catalog.hpp"
#include "matspace/classify.hpp"
#include "matspace/common.hpp"
#include "matspace/registry.hpp"
#include "matspace/suites.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace matspace;

void emit(const ordered_json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw value_error("cannot write " + out_path);
    out << doc.dump(2) << '\n';
}

ordered_json subspace_json(const Subspace& s) {
    ordered_json rows = ordered_json::array();
    for (unsigned i = 0; i < s.dim(); ++i) rows.push_back(s.basis_element(i).to_string());
    return ordered_json{{"ambient_rows", s.ambient_rows()},
                        {"ambient_cols", s.ambient_cols()},
                        {"dim", s.dim()},
                        {"basis", rows}};
}

ordered_json classification_json(const Classification& cls) {
    ordered_json j;
    j["kind"] = kind_name(cls.kind);
    if (cls.kernel_line) j["kernel_line"] = cls.kernel_line->line.rep();
    if (cls.coimage_line) j["coimage_line"] = cls.coimage_line->line.rep();
    if (cls.witness) {
        j["witness_p"] = cls.witness->p.to_string();
        j["witness_q"] = cls.witness->q.to_string();
    }
    return j;
}

ordered_json command_doc(const std::string& command) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

struct Cli {
    std::string suite, out;
    unsigned field = 0, jobs = 1;
    std::uint64_t seed = 1;
    bool long_running = false;

    const FieldTable& the_field(unsigned fallback) const {
        return make_field(field ? field : fallback);
    }
};

int run_census(const Cli& cli, const std::string& ambient, const std::string& inside,
               unsigned dim) {
    ordered_json doc = command_doc("census");
    if (inside.empty()) {
        if (ambient != "m3f2") throw value_error("unsupported ambient: " + ambient);
        if (dim != 5) throw value_error("the full census is pinned to dimension 5");
        CensusResult c = census_5dim_singular(cli.jobs);
        doc["parameters"] = {{"ambient", ambient}, {"dim", dim}, {"jobs", cli.jobs}};
        doc["total"] = c.total;
        doc["singular"] = c.singular;
        ordered_json kinds;
        for (size_t k = 0; k < c.by_kind.size(); ++k)
            kinds[kind_name(static_cast<Kind>(k))] = c.by_kind[k];
        doc["by_kind"] = kinds;
        doc["partitions"] = c.partitions;
    } else {
        Subspace v = lookup_space(cli.the_field(2), inside);
        InsideCensus ic = census_inside(v, dim, cli.jobs);
        doc["parameters"] = {{"inside", inside}, {"dim", dim}, {"jobs", cli.jobs}};
        doc["total"] = ic.total;
        doc["singular"] = ic.singular.size();
        ordered_json survivors = ordered_json::array();
        for (const auto& [s, cls] : ic.singular) {
            ordered_json entry = subspace_json(s);
            if (dim == 5) entry["classification"] = classification_json(cls);
            survivors.push_back(entry);
        }
        doc["survivors"] = survivors;
        doc["partitions"] = ic.partitions;
    }
    emit(doc, cli.out);
    return 0;
}

int run_classify(const Cli& cli, const std::string& space) {
    Subspace v = lookup_space(cli.the_field(2), space);
    ordered_json doc = command_doc("classify");
    doc["parameters"] = {{"space", space}};
    doc["space"] = subspace_json(v);
    doc["classification"] = classification_json(classify_singular(v));
    emit(doc, cli.out);
    return 0;
}

int run_orbit(const Cli& cli, const std::string& space) {
    Subspace v = lookup_space(cli.the_field(2), space);
    ordered_json doc = command_doc("orbit");
    doc["parameters"] = {{"space", space}, {"field", v.field().q()}};
    doc["orbit"] = hyperplane_orbit(v);
    emit(doc, cli.out);
    return 0;
}

int run_equiv(const Cli& cli, const std::string& a, const std::string& b) {
    const FieldTable& f = cli.the_field(2);
    Subspace s = lookup_space(f, a), t = lookup_space(f, b);
    ordered_json doc = command_doc("equiv");
    doc["parameters"] = {{"space_a", a}, {"space_b", b}, {"field", f.q()}};
    auto w = are_equivalent(s, t);
    doc["equivalent"] = w.has_value();
    if (w) {
        doc["witness_p"] = w->p.to_string();
        doc["witness_q"] = w->q.to_string();
    }
    emit(doc, cli.out);
    return 0;
}

int run_search(const Cli& cli, const std::string& domain, const std::string& predicate,
               bool check_extension, unsigned n) {
    const FieldTable& f = cli.the_field(2);
    Subspace d = lookup_space(f, domain);
    SearchPredicate p =
        predicate == "weak" ? SearchPredicate::weak : SearchPredicate::strong;
    EmbeddingSearch es = search_embeddings(d, n, p, check_extension, cli.jobs);
    ordered_json doc = command_doc("search");
    doc["parameters"] = {{"domain", domain},
                         {"field", f.q()},
                         {"n", n},
                         {"predicate", predicate},
                         {"check_extension", check_extension},
                         {"jobs", cli.jobs}};
    doc["tuples"] = es.tuples;
    doc["injective"] = es.injective;
    doc["hits"] = es.hits;
    if (es.extension_checked) {
        doc["extendable"] = es.extendable;
        doc["non_extendable"] = es.non_extendable;
        ordered_json examples = ordered_json::array();
        for (const SubspaceLinearMap& m : es.non_extendable_examples) {
            ordered_json images = ordered_json::array();
            for (const Matrix& img : m.images) images.push_back(img.to_string());
            examples.push_back(images);
        }
        doc["non_extendable_examples"] = examples;
    }
    doc["partitions"] = es.partitions;
    emit(doc, cli.out);
    return 0;
}

int run_oracle(const Cli& cli, const std::string& name, unsigned p) {
    ordered_json doc = command_doc("oracle");
    if (name == "representation") {
        const FieldTable& f = cli.the_field(2);
        RepresentationOracle rep = representation_lemma_oracle(f, 2, 2, 2);
        doc["parameters"] = {{"name", name}, {"field", f.q()}, {"n", 2}, {"p", 2}, {"r", 2}};
        doc["maps"] = rep.maps;
        doc["survivors"] = rep.survivors;
        doc["all_right_multiplications"] = rep.all_right_multiplications;
        doc["includes_zero"] = rep.includes_zero;
        doc["includes_identity"] = rep.includes_identity;
    } else if (name == "add-nonsingular") {
        const FieldTable& f = cli.the_field(2);
        AddToNonsingularOracle oracle = add_to_nonsingular_oracle(f, p);
        doc["parameters"] = {{"name", name}, {"field", f.q()}, {"p", p}};
        doc["candidates"] = oracle.candidates;
        doc["satisfiers"] = oracle.satisfiers;
        doc["only_zero"] = oracle.only_zero;
    } else if (name == "centralizer") {
        if (cli.field && cli.field != 2)
            throw value_error("the centralizer oracle runs over GF(2)");
        CentralizerCriterion cc = centralizer_rank1_criterion();
        doc["parameters"] = {{"name", name}, {"field", 2}};
        doc["checked"] = cc.checked;
        doc["violations"] = cc.violations;
        if (cc.first_violation) doc["first_violation"] = cc.first_violation->to_string();
    } else if (name == "trace-identities") {
        if (cli.field && cli.field != 2)
            throw value_error("the trace-identities oracle runs over GF(2)");
        TraceFormIdentities ti = trace_form_identities();
        doc["parameters"] = {{"name", name}, {"field", 2}};
        doc["cube_trace_equals_det"] = ti.cube_trace_equals_det;
        doc["polarization_identity"] = ti.polarization_identity;
    } else {
        throw value_error("unknown oracle: " + name);
    }
    emit(doc, cli.out);
    return 0;
}

int run_checkmap(const Cli& cli, const std::string& domain, const std::string& path) {
    const FieldTable& f = cli.the_field(2);
    Subspace d = lookup_space(f, domain);
    SubspaceLinearMap m = load_map(d, path);
    ordered_json doc = command_doc("checkmap");
    doc["parameters"] = {{"domain", domain}, {"map", path}, {"field", f.q()}};
    doc["injective"] = m.is_injective();
    doc["weak_preserver"] = is_weak_preserver(m);
    doc["strong_preserver"] = is_strong_preserver(m);
    doc["det_preserver"] = is_det_preserver(m);
    doc["rank_preserver"] = is_rank_preserver(m);
    if (auto v = rank_violation(m)) {
        doc["rank_violation"] = {{"element", v->to_string()},
                                 {"rank_before", v->rank()},
                                 {"rank_after", m.apply(*v).rank()}};
    }
    auto ext = frobenius_extension(m);
    doc["frobenius_extension"] = ext.has_value();
    if (ext) {
        doc["extension_p"] = ext->p.to_string();
        doc["extension_q"] = ext->q.to_string();
        doc["extension_transposed"] = ext->transposed;
    }
    emit(doc, cli.out);
    return 0;
}

int run_suites(const Cli& cli) {
    SuiteOptions opts;
    opts.field = cli.field;
    opts.jobs = cli.jobs;
    opts.seed = cli.seed;
    opts.long_running = cli.long_running;
    std::vector<std::string> names;
    if (cli.suite == "all")
        names = suite_names();
    else
        names.push_back(cli.suite);
    bool all_pass = true;
    ordered_json docs = ordered_json::array();
    for (const std::string& name : names) {
        Report r = run_suite(name, opts);
        all_pass = all_pass && r.all_pass();
        docs.push_back(r.to_json());
    }
    emit(names.size() == 1 ? docs[0] : docs, cli.out);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-field matrix space toolkit"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    Cli cli;
    app.add_option("--suite", cli.suite,
                   "run a verification suite (or 'all'); see --list-suites");
    app.add_option("--field", cli.field, "field size q (supported: 2,3,4,5,7,8,9)");
    app.add_option("--jobs", cli.jobs, "worker threads; claims are jobs-independent")
        ->check(CLI::Range(1u, 64u));
    app.add_option("--seed", cli.seed, "seed recorded in reports");
    app.add_flag("--long-running", cli.long_running, "enable the GF(4) hyperplane scan");
    app.add_option("--out", cli.out, "write JSON here instead of stdout");
    bool list_suites = false;
    app.add_flag("--list-suites", list_suites, "print suite names and exit");

    auto* census = app.add_subcommand("census", "count and classify subspaces");
    std::string ambient = "m3f2", inside;
    unsigned dim = 5;
    census->add_option("--ambient", ambient, "ambient space (m3f2)");
    census->add_option("--inside", inside, "restrict to subspaces of this space");
    census->add_option("--dim", dim, "subspace dimension");

    auto* classify = app.add_subcommand("classify", "classify one singular subspace");
    std::string space;
    classify->add_option("--space", space, "space name or fixture file")->required();

    auto* orbit = app.add_subcommand("orbit", "orbit label of a hyperplane");
    std::string orbit_space;
    orbit->add_option("--space", orbit_space, "space name or fixture file")->required();

    auto* equiv = app.add_subcommand("equiv", "equivalence under P V Q^-1");
    std::string space_a, space_b;
    equiv->add_option("--space-a", space_a, "first space")->required();
    equiv->add_option("--space-b", space_b, "second space")->required();

    auto* search = app.add_subcommand("search", "scan all linear maps from a domain");
    std::string domain, predicate = "weak";
    bool check_extension = false;
    unsigned target_n = 2;
    search->add_option("--domain", domain, "domain space name")->required();
    search->add_option("--predicate", predicate, "weak or strong")
        ->check(CLI::IsMember({"weak", "strong"}));
    search->add_flag("--check-extension", check_extension,
                     "match hits against Frobenius restrictions");
    search->add_option("--n", target_n, "target matrix size");

    auto* oracle = app.add_subcommand("oracle", "run a brute-force oracle");
    std::string oracle_name;
    unsigned oracle_p = 2;
    oracle
        ->add_option("--name", oracle_name,
                     "representation | add-nonsingular | centralizer | trace-identities")
        ->required();
    oracle->add_option("--p", oracle_p, "matrix size for add-nonsingular");

    auto* checkmap = app.add_subcommand("checkmap", "evaluate a map fixture");
    std::string map_domain, map_path;
    checkmap->add_option("--domain", map_domain, "domain space name")->required();
    checkmap->add_option("--map", map_path, "basis-image table file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (list_suites) {
            for (const std::string& name : suite_names()) std::cout << name << '\n';
            return 0;
        }
        if (census->parsed()) return run_census(cli, ambient, inside, dim);
        if (classify->parsed()) return run_classify(cli, space);
        if (orbit->parsed()) return run_orbit(cli, orbit_space);
        if (equiv->parsed()) return run_equiv(cli, space_a, space_b);
        if (search->parsed()) return run_search(cli, domain, predicate, check_extension, target_n);
        if (oracle->parsed()) return run_oracle(cli, oracle_name, oracle_p);
        if (checkmap->parsed()) return run_checkmap(cli, map_domain, map_path);
        if (!cli.suite.empty()) return run_suites(cli);
        std::cerr << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

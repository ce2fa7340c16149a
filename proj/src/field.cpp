#include "matspace/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace matspace {

namespace {

// Digits of e in base p, least significant first.
void to_digits(unsigned e, unsigned p, unsigned k, unsigned* d) {
    for (unsigned i = 0; i < k; ++i) {
        d[i] = e % p;
        e /= p;
    }
}

unsigned from_digits(const unsigned* d, unsigned p, unsigned k) {
    unsigned e = 0;
    for (unsigned i = k; i-- > 0;) e = e * p + d[i];
    return e;
}

} // namespace

FieldTable::FieldTable(unsigned q, unsigned p, unsigned k, const std::vector<Elem>& reduction)
    : q_(q), p_(p), k_(k), add_(q * q), mul_(q * q), neg_(q), inv_(q, 0) {
    // reduction holds the digits of x^k rewritten in lower-degree terms,
    // e.g. GF(8): x^3 = x + 1 -> {1, 1, 0}.
    for (unsigned a = 0; a < q; ++a) {
        unsigned da[4], db[4];
        to_digits(a, p, k, da);
        for (unsigned b = 0; b < q; ++b) {
            to_digits(b, p, k, db);
            unsigned sum[4];
            for (unsigned i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
            add_[a * q + b] = static_cast<Elem>(from_digits(sum, p, k));

            unsigned prod[8] = {0};
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (unsigned i = 2 * k - 2 + 1; i-- > k;) {
                unsigned t = prod[i];
                if (t == 0) continue;
                prod[i] = 0;
                for (unsigned j = 0; j < k; ++j)
                    prod[i - k + j] = (prod[i - k + j] + t * reduction[j]) % p;
            }
            mul_[a * q + b] = static_cast<Elem>(from_digits(prod, p, k));
        }
        unsigned nd[4];
        to_digits(a, p, k, nd);
        for (unsigned i = 0; i < k; ++i) nd[i] = (p - nd[i]) % p;
        neg_[a] = static_cast<Elem>(from_digits(nd, p, k));
    }
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) {
                inv_[a] = static_cast<Elem>(b);
                break;
            }
}

const std::vector<unsigned>& supported_fields() {
    static const std::vector<unsigned> fields{2, 3, 4, 5, 7, 8, 9};
    return fields;
}

const FieldTable& make_field(unsigned q) {
    static std::map<unsigned, std::unique_ptr<FieldTable>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(q);
    if (it != cache.end()) return *it->second;

    unsigned p = 0, k = 0;
    std::vector<Elem> red;
    switch (q) {
        case 2: p = 2; k = 1; red = {0}; break;
        case 3: p = 3; k = 1; red = {0}; break;
        case 5: p = 5; k = 1; red = {0}; break;
        case 7: p = 7; k = 1; red = {0}; break;
        case 4: p = 2; k = 2; red = {1, 1}; break;       // x^2 = x + 1
        case 8: p = 2; k = 3; red = {1, 1, 0}; break;    // x^3 = x + 1
        case 9: p = 3; k = 2; red = {2, 0}; break;       // x^2 = -1
        default:
            throw unsupported_field_error("GF(" + std::to_string(q) +
                                          ") is not supported; q must be one of 2,3,4,5,7,8,9");
    }
    auto table = std::unique_ptr<FieldTable>(new FieldTable(q, p, k, red));
    const FieldTable& ref = *table;
    cache.emplace(q, std::move(table));
    return ref;
}

} // namespace matspace

#pragma once

#include "matspace/common.hpp"

#include <vector>

namespace matspace {

// Arithmetic tables for GF(q), q in {2,3,4,5,7,8,9}.
//
// Elements are encoded 0..q-1.  Prime fields store the residue itself.
// Extension fields GF(p^k) store the base-p digits of the polynomial
// coefficients, constant term least significant, so the encoding of
// c0 + c1*x (+ c2*x^2) is c0 + c1*p (+ c2*p^2).  Reduction polynomials
// are pinned:
//   GF(4): x^2 + x + 1      GF(8): x^3 + x + 1      GF(9): x^2 + 1
//
// Tables are immutable after construction and safe to share across threads.
class FieldTable {
public:
    unsigned q() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return k_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }

    // a must be nonzero.
    Elem inv(Elem a) const {
        if (a == 0) throw value_error("inverse of zero in GF(" + std::to_string(q_) + ')');
        return inv_[a];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool operator==(const FieldTable& o) const { return this == &o; }

private:
    friend const FieldTable& make_field(unsigned q);
    FieldTable(unsigned q, unsigned p, unsigned k, const std::vector<Elem>& reduction);

    unsigned q_, p_, k_;
    std::vector<Elem> add_, mul_, neg_, inv_;
};

// Shared table for GF(q); throws unsupported_field_error for any other q.
const FieldTable& make_field(unsigned q);

// The supported field sizes, ascending.
const std::vector<unsigned>& supported_fields();

} // namespace matspace

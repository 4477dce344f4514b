#include "clusterau/laurent.hpp"

#include "clusterau/errors.hpp"
#include "detail/text.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace clusterau {

namespace {

// Graded lexicographic comparison of a[lo, hi) against b[lo, hi).
int grlex_compare(const LaurentPoly::Exponents& a, const LaurentPoly::Exponents& b, std::size_t lo, std::size_t hi) {
    // Degrees are compared as 128-bit sums so that extreme exponents cannot wrap.
    __extension__ using Wide = __int128;
    Wide da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void require_same_shape(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.variables() != q.variables() || p.generators() != q.generators())
        throw DimensionMismatch("Laurent polynomials over (" + std::to_string(p.variables()) + ", " +
                                std::to_string(p.generators()) + ") and (" + std::to_string(q.variables()) +
                                ", " + std::to_string(q.generators()) + ") variables");
}

LaurentPoly::Exponents add_keys(const LaurentPoly::Exponents& a, const LaurentPoly::Exponents& b) {
    LaurentPoly::Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
    return out;
}

void write_factor(std::ostream& os, bool& first, char name, std::size_t index, Int e) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << name << (index + 1);
    if (e != 1) os << '^' << e;
}

}  // namespace

bool LaurentPoly::TermOrder::operator()(const Exponents& a, const Exponents& b) const {
    int c = grlex_compare(a, b, 0, variables);
    if (c == 0) c = grlex_compare(a, b, variables, a.size());
    return c > 0;
}

LaurentPoly::LaurentPoly(std::size_t variables, std::size_t generators)
    : n_(variables), m_(generators), terms_(TermOrder{variables}) {}

LaurentPoly LaurentPoly::constant(std::size_t variables, std::size_t generators, BigInt c) {
    LaurentPoly p(variables, generators);
    p.accumulate(Exponents(variables + generators, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t variables, std::size_t generators, std::size_t index) {
    if (index >= variables) throw std::out_of_range("variable index out of range");
    Exponents key(variables + generators, 0);
    key[index] = 1;
    LaurentPoly p(variables, generators);
    p.accumulate(key, 1);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t variables, Exponents exps, BigInt c) {
    if (exps.size() < variables) throw DimensionMismatch("exponent vector shorter than the variable count");
    LaurentPoly p(variables, exps.size() - variables);
    p.accumulate(exps, c);
    return p;
}

LaurentPoly LaurentPoly::from_trop(std::size_t variables, const TropMonomial& a) {
    Exponents key(variables + a.generators(), 0);
    for (std::size_t i = 0; i < a.generators(); ++i) key[variables + i] = to_machine(a[i]);
    return monomial(variables, std::move(key));
}

void LaurentPoly::accumulate(const Exponents& key, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

bool LaurentPoly::is_unit_monomial() const {
    return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [key, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result = constant(n_, m_, 1);
    LaurentPoly base = *this;
    while (e != 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
    if (shift.size() != n_ + m_) throw DimensionMismatch("shift has the wrong length");
    LaurentPoly out(n_, m_);
    // A monomial shift preserves the term order, so hinted insertion at the end is exact.
    for (const auto& [key, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), add_keys(key, shift), c);
    return out;
}

LaurentPoly::Exponents LaurentPoly::min_exponents() const {
    Exponents out(n_ + m_, 0);
    if (terms_.empty()) return out;
    out = terms_.begin()->first;
    for (const auto& [key, c] : terms_)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], key[i]);
    return out;
}

TropMonomial LaurentPoly::coefficient_monomial(const Exponents& key) const {
    std::vector<BigInt> exps(m_);
    for (std::size_t i = 0; i < m_; ++i) exps[i] = key.at(n_ + i);
    return TropMonomial(std::move(exps));
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [key, c] : terms_) {
        BigInt magnitude = abs(c);
        if (first_term) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first_term = false;

        bool constant_term = std::all_of(key.begin(), key.end(), [](Int e) { return e == 0; });
        bool first = true;
        if (magnitude != 1 || constant_term) {
            os << magnitude;
            first = false;
        }
        for (std::size_t i = 0; i < n_; ++i) write_factor(os, first, 'x', i, key[i]);
        for (std::size_t i = 0; i < m_; ++i) write_factor(os, first, 'z', i, key[n_ + i]);
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t variables, std::size_t generators) {
    LaurentPoly out(variables, generators);
    detail::Cursor cur(text);
    cur.skip_space();
    if (cur.at_end()) throw ParseError(0, "empty polynomial");
    bool first_term = true;
    while (true) {
        cur.skip_space();
        if (cur.at_end()) break;
        BigInt sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (cur.peek() == '-') sign = -1;
            cur.advance();
            cur.skip_space();
        } else if (!first_term) {
            throw ParseError(0, "expected '+' or '-' between terms of '" + std::string(text) + "'");
        }
        first_term = false;

        BigInt coefficient = sign;
        Exponents key(variables + generators, 0);
        while (true) {
            cur.skip_space();
            char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coefficient *= BigInt(std::string(cur.read_digits()));
            } else if (c == 'x' || c == 'z') {
                cur.advance();
                std::size_t index = cur.read_index();
                std::size_t limit = c == 'x' ? variables : generators;
                if (index == 0 || index > limit)
                    throw ParseError(0, std::string(1, c) + std::to_string(index) + " outside " + c + "1.." + c +
                                            std::to_string(limit));
                Int e = 1;
                cur.skip_space();
                if (cur.peek() == '^') {
                    cur.advance();
                    e = cur.read_signed_int();
                }
                std::size_t slot = (c == 'x' ? 0 : variables) + index - 1;
                key[slot] = checked_add(key[slot], e);
            } else {
                throw ParseError(0, "unexpected character in '" + std::string(text) + "'");
            }
            cur.skip_space();
            if (cur.peek() != '*') break;
            cur.advance();
        }
        out.accumulate(key, coefficient);
    }
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_.size() == b.terms_.size() &&
           std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin());
}

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_shape(p, q);
    LaurentPoly out = p;
    for (const auto& [key, c] : q.terms_) out.accumulate(key, c);
    return out;
}

LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_shape(p, q);
    LaurentPoly out(p.n_, p.m_);
    for (const auto& [kp, cp] : p.terms_)
        for (const auto& [kq, cq] : q.terms_) out.accumulate(add_keys(kp, kq), cp * cq);
    return out;
}

LaurentPoly lp_exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_shape(p, q);
    if (q.is_zero()) throw NotDivisible("division by the zero polynomial");
    if (p.is_zero()) return p;

    const std::size_t width = p.n_ + p.m_;
    auto p_shift = p.min_exponents();
    auto q_shift = q.min_exponents();
    LaurentPoly::Exponents to_poly_p(width), to_poly_q(width), back(width);
    for (std::size_t i = 0; i < width; ++i) {
        to_poly_p[i] = checked_neg(p_shift[i]);
        to_poly_q[i] = checked_neg(q_shift[i]);
        back[i] = checked_add(p_shift[i], to_poly_q[i]);
    }
    LaurentPoly remainder = p.shifted(to_poly_p);
    const LaurentPoly divisor = q.shifted(to_poly_q);
    const auto& [lead_key, lead_coeff] = *divisor.terms_.begin();

    LaurentPoly quotient(p.n_, p.m_);
    while (!remainder.is_zero()) {
        const auto& [rkey, rcoeff] = *remainder.terms_.begin();
        LaurentPoly::Exponents step(width);
        for (std::size_t i = 0; i < width; ++i) {
            step[i] = rkey[i] - lead_key[i];
            if (step[i] < 0)
                throw NotDivisible("leading term of the divisor does not divide the remainder: " + p.str() + " / " +
                                   q.str());
        }
        if (rcoeff % lead_coeff != 0)
            throw NotDivisible("non-integral quotient coefficient: " + p.str() + " / " + q.str());
        BigInt c = rcoeff / lead_coeff;
        quotient.accumulate(step, c);
        for (const auto& [dkey, dcoeff] : divisor.terms_) remainder.accumulate(add_keys(dkey, step), -c * dcoeff);
    }
    return quotient.shifted(back);
}

bool coeffs_in_ring(const LaurentPoly& p, const GroundRing& r) {
    for (const auto& [key, c] : p.terms())
        if (!in_ground_ring(p.coefficient_monomial(key), r)) return false;
    return true;
}

}  // namespace clusterau

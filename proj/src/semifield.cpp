#include "clusterau/semifield.hpp"

#include "clusterau/errors.hpp"
#include "detail/text.hpp"

#include <algorithm>
#include <sstream>

namespace clusterau {

namespace {

void require_same_generators(const TropMonomial& a, const TropMonomial& b) {
    if (a.generators() != b.generators())
        throw DimensionMismatch("monomials over " + std::to_string(a.generators()) + " and " +
                                std::to_string(b.generators()) + " generators");
}

}  // namespace

TropMonomial TropMonomial::generator(std::size_t generators, std::size_t index) {
    if (index >= generators) throw std::out_of_range("generator index out of range");
    std::vector<BigInt> exps(generators);
    exps[index] = 1;
    return TropMonomial(std::move(exps));
}

bool TropMonomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const BigInt& e) { return e == 0; });
}

TropMonomial TropMonomial::inverse() const {
    std::vector<BigInt> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = -exps_[i];
    return TropMonomial(std::move(out));
}

TropMonomial TropMonomial::pow(const BigInt& e) const {
    std::vector<BigInt> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = exps_[i] * e;
    return TropMonomial(std::move(out));
}

TropMonomial TropMonomial::appended(const BigInt& exponent) const {
    auto out = exps_;
    out.push_back(exponent);
    return TropMonomial(std::move(out));
}

TropMonomial TropMonomial::without(std::size_t index) const {
    if (index >= exps_.size()) throw std::out_of_range("generator index out of range");
    auto out = exps_;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
    return TropMonomial(std::move(out));
}

std::string TropMonomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'z' << (i + 1);
        if (exps_[i] != 1) os << '^' << exps_[i];
    }
    if (first) return "1";
    return os.str();
}

TropMonomial TropMonomial::parse(std::string_view text, std::size_t generators) {
    std::vector<BigInt> exps(generators);
    detail::Cursor cur(text);
    cur.skip_space();
    if (cur.at_end()) throw ParseError(0, "empty monomial");
    if (cur.peek() == '1') {
        cur.advance();
        cur.skip_space();
        if (!cur.at_end()) throw ParseError(0, "unexpected text after '1' in monomial '" + std::string(text) + "'");
        return TropMonomial(std::move(exps));
    }
    while (true) {
        cur.skip_space();
        if (cur.peek() != 'z') throw ParseError(0, "expected generator z<k> in monomial '" + std::string(text) + "'");
        cur.advance();
        std::size_t index = cur.read_index();
        if (index == 0 || index > generators)
            throw ParseError(0, "generator z" + std::to_string(index) + " outside z1..z" + std::to_string(generators));
        BigInt e = 1;
        cur.skip_space();
        if (cur.peek() == '^') {
            cur.advance();
            e = cur.read_signed_big();
        }
        exps[index - 1] += e;
        cur.skip_space();
        if (cur.at_end()) break;
        if (cur.peek() != '*') throw ParseError(0, "expected '*' in monomial '" + std::string(text) + "'");
        cur.advance();
    }
    return TropMonomial(std::move(exps));
}

TropMonomial trop_mul(const TropMonomial& a, const TropMonomial& b) {
    require_same_generators(a, b);
    std::vector<BigInt> out(a.generators());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return TropMonomial(std::move(out));
}

TropMonomial trop_add(const TropMonomial& a, const TropMonomial& b) {
    require_same_generators(a, b);
    std::vector<BigInt> out(a.generators());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] < b[i] ? a[i] : b[i];
    return TropMonomial(std::move(out));
}

TropMonomial oplus_one(const TropMonomial& a) {
    return trop_add(a, TropMonomial(a.generators()));
}

GroundRing GroundRing::localized(std::set<std::size_t> inverted) {
    if (inverted.empty()) return polynomial();
    return GroundRing(Kind::Localized, std::move(inverted));
}

bool GroundRing::inverts(std::size_t generator) const {
    switch (kind_) {
        case Kind::FullLaurent: return true;
        case Kind::Polynomial: return false;
        case Kind::Localized: return inverted_.count(generator) != 0;
    }
    return false;
}

GroundRing GroundRing::inverting(std::size_t generator) const {
    if (kind_ == Kind::FullLaurent) return *this;
    auto s = inverted_;
    s.insert(generator);
    return localized(std::move(s));
}

std::string GroundRing::str() const {
    switch (kind_) {
        case Kind::FullLaurent: return "zp";
        case Kind::Polynomial: return "zp+";
        case Kind::Localized: break;
    }
    std::string out = "zp+:";
    bool first = true;
    for (auto g : inverted_) {
        if (!first) out += ',';
        first = false;
        out += 'z' + std::to_string(g + 1);
    }
    return out;
}

GroundRing GroundRing::parse(std::string_view text) {
    if (text == "zp") return full_laurent();
    if (text == "zp+") return polynomial();
    constexpr std::string_view prefix = "zp+:";
    if (text.substr(0, prefix.size()) != prefix)
        throw ParseError(0, "unknown ground ring '" + std::string(text) + "' (expected zp, zp+ or zp+:z1,z2,...)");
    std::set<std::size_t> inverted;
    detail::Cursor cur(text.substr(prefix.size()));
    while (!cur.at_end()) {
        cur.skip_space();
        if (cur.peek() != 'z') throw ParseError(0, "expected z<k> in ground ring '" + std::string(text) + "'");
        cur.advance();
        std::size_t index = cur.read_index();
        if (index == 0) throw ParseError(0, "generators are numbered from z1");
        inverted.insert(index - 1);
        cur.skip_space();
        if (cur.at_end()) break;
        if (cur.peek() != ',') throw ParseError(0, "expected ',' in ground ring '" + std::string(text) + "'");
        cur.advance();
    }
    return localized(std::move(inverted));
}

bool in_ground_ring(const TropMonomial& a, const GroundRing& r) {
    return blocking_generators(a, r).empty();
}

std::vector<std::size_t> blocking_generators(const TropMonomial& a, const GroundRing& r) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.generators(); ++i)
        if (a[i] < 0 && !r.inverts(i)) out.push_back(i);
    return out;
}

bool lp_conditions_hold(std::span<const TropMonomial> y, const GroundRing& r) {
    for (const auto& yi : y) {
        auto denominator = oplus_one(yi).inverse();
        if (!in_ground_ring(yi * denominator, r) || !in_ground_ring(denominator, r)) return false;
    }
    return true;
}

}  // namespace clusterau

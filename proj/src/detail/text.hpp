#pragma once

// Minimal character cursor shared by the monomial, polynomial and ring parsers.

#include "clusterau/errors.hpp"
#include "clusterau/integer.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

namespace clusterau::detail {

class Cursor {
  public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void advance() { ++pos_; }
    std::size_t position() const { return pos_; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view read_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(0, "expected digits in '" + std::string(text_) + "'");
        return text_.substr(start, pos_ - start);
    }

    std::size_t read_index() {
        auto digits = read_digits();
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc()) throw ParseError(0, "index out of range: " + std::string(digits));
        return v;
    }

    BigInt read_signed_big() {
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            advance();
        }
        BigInt v{std::string(read_digits())};
        return negative ? BigInt(-v) : v;
    }

    Int read_signed_int() {
        BigInt v = read_signed_big();
        return to_machine(v);
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace clusterau::detail

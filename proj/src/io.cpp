#include "clusterau/io.hpp"

#include "clusterau/errors.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace clusterau {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (std::size_t number = 1; std::getline(in, raw); ++number) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = raw.find_last_not_of(" \t\r");
        out.push_back({number, raw.substr(first, last - first + 1)});
    }
    return out;
}

std::vector<std::string> tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

Int parse_int(const std::string& token, std::size_t line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + token + "'");
    }
}

std::size_t parse_count(const std::string& token, std::size_t line) {
    Int v = parse_int(token, line);
    if (v < 0) throw ParseError(line, "expected a nonnegative count, got '" + token + "'");
    return static_cast<std::size_t>(v);
}

std::pair<std::size_t, std::size_t> parse_header(const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError(1, "missing header line 'n m'");
    auto t = tokens(lines[0].text);
    if (t.size() != 2) throw ParseError(lines[0].number, "header must be 'n m'");
    return {parse_count(t[0], lines[0].number), parse_count(t[1], lines[0].number)};
}

}  // namespace

Seed parse_seed(std::string_view text) {
    const auto lines = content_lines(text);
    const auto [n, m] = parse_header(lines);
    std::size_t next = 1;
    auto take = [&](const char* what) -> const Line& {
        if (next >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().number + 1, std::string("missing ") + what);
        return lines[next++];
    };

    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        const Line& line = take("exchange matrix row");
        auto t = tokens(line.text);
        if (t.size() != n) throw ParseError(line.number, "row " + std::to_string(i + 1) + " needs " + std::to_string(n) + " entries");
        std::vector<Int> row;
        for (const auto& tok : t) row.push_back(parse_int(tok, line.number));
        rows.push_back(std::move(row));
    }
    ExchangeMatrix b;
    try {
        b = ExchangeMatrix(rows);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[1].number, e.what());
    }

    std::vector<TropMonomial> y;
    for (std::size_t i = 0; i < n; ++i) {
        const Line& line = take("coefficient monomial");
        try {
            y.push_back(TropMonomial::parse(line.text, m));
        } catch (const std::exception& e) {
            throw ParseError(line.number, e.what());
        }
    }

    std::vector<std::string> labels;
    if (next < lines.size()) {
        const Line& line = lines[next++];
        labels = tokens(line.text);
        if (labels.size() != n) throw ParseError(line.number, "label line needs " + std::to_string(n) + " labels");
    }
    if (next < lines.size()) throw ParseError(lines[next].number, "unexpected trailing content");
    return Seed(std::move(b), std::move(y), m, std::move(labels));
}

std::string render_seed(const Seed& s) {
    std::ostringstream os;
    os << s.rank() << ' ' << s.generators() << '\n';
    for (std::size_t i = 0; i < s.rank(); ++i) {
        for (std::size_t j = 0; j < s.rank(); ++j) os << (j ? " " : "") << s.matrix()(i, j);
        os << '\n';
    }
    for (const auto& yi : s.coefficients()) os << yi.str() << '\n';
    bool default_labels = true;
    for (std::size_t i = 0; i < s.rank(); ++i) default_labels &= s.labels()[i] == "x" + std::to_string(i + 1);
    if (!default_labels) {
        for (std::size_t i = 0; i < s.rank(); ++i) os << (i ? " " : "") << s.labels()[i];
        os << '\n';
    }
    return os.str();
}

Quiver parse_quiver(std::string_view text) {
    const auto lines = content_lines(text);
    const auto [n, m] = parse_header(lines);
    std::vector<Arrow> arrows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto t = tokens(lines[i].text);
        if (t.size() != 3) throw ParseError(lines[i].number, "arrow lines are 'src dst mult'");
        arrows.push_back({parse_count(t[0], lines[i].number), parse_count(t[1], lines[i].number),
                          parse_int(t[2], lines[i].number)});
        try {
            // Validate incrementally so the error points at the offending line.
            (void)Quiver::from_arrows(n, m, arrows);
        } catch (const std::exception& e) {
            throw ParseError(lines[i].number, e.what());
        }
    }
    return Quiver::from_arrows(n, m, arrows);
}

std::string render_quiver(const Quiver& q) {
    std::ostringstream os;
    os << q.mutable_count() << ' ' << q.frozen_count() << '\n';
    for (const auto& a : q.arrow_list()) os << a.source << ' ' << a.target << ' ' << a.multiplicity << '\n';
    return os.str();
}

std::string quiver_dot(const Quiver& q, std::string_view name) {
    auto vertex = [&](std::size_t v) {
        return q.is_frozen(v) ? "\"" + std::to_string(v - q.mutable_count() + 1) + "'\"" : std::to_string(v + 1);
    };
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        os << "  " << vertex(v) << " [shape=" << (q.is_frozen(v) ? "box" : "circle") << "];\n";
    for (const auto& a : q.arrow_list()) {
        os << "  " << vertex(a.source) << " -> " << vertex(a.target);
        if (a.multiplicity > 1) os << " [label=\"" << a.multiplicity << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace clusterau

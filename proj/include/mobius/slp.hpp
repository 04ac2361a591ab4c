#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mobius/matrix.hpp"
#include "mobius/poset.hpp"

namespace mobius {

enum class StmtOp { add, sub };

struct Statement {
    StmtOp op;
    int target;
    int source;

    bool operator==(const Statement&) const = default;
};

// A straight-line program over vectors of width v: the output starts as a
// copy of the input, then the statements run in order.  The length is the
// statement count; the initialization copy is not counted.
class Slp {
public:
    explicit Slp(int width, TransformKind kind = TransformKind::unknown)
        : width_(width), kind_(kind) {
        if (width < 0) throw std::invalid_argument("negative program width");
    }

    void push(StmtOp op, int target, int source) {
        if (target < 0 || target >= width_ || source < 0 || source >= width_)
            throw std::invalid_argument("statement id out of range");
        if (target == source)
            throw std::invalid_argument("statement target equals source");
        statements_.push_back({op, target, source});
    }

    int width() const { return width_; }
    TransformKind kind() const { return kind_; }
    const std::vector<Statement>& statements() const { return statements_; }
    std::size_t length() const { return statements_.size(); }

private:
    int width_;
    TransformKind kind_;
    std::vector<Statement> statements_;
};

inline std::vector<std::int64_t> evaluate(const Slp& p,
                                          const std::vector<std::int64_t>& input) {
    if (static_cast<int>(input.size()) != p.width())
        throw std::invalid_argument("input width mismatch");
    std::vector<std::int64_t> out = input;
    for (const Statement& st : p.statements()) {
        out[st.target] = st.op == StmtOp::add
                             ? checked_add(out[st.target], out[st.source])
                             : checked_sub(out[st.target], out[st.source]);
    }
    return out;
}

// Expands p to the matrix M with evaluate(p, f) = f·M, by running p on the
// v unit vectors.
inline TransformMatrix slp_to_matrix(const Slp& p) {
    TransformMatrix m(p.width(), p.kind());
    std::vector<std::int64_t> unit(p.width(), 0);
    for (int x = 0; x < p.width(); ++x) {
        unit[x] = 1;
        std::vector<std::int64_t> row = evaluate(p, unit);
        for (int y = 0; y < p.width(); ++y) m.at(x, y) = row[y];
        unit[x] = 0;
    }
    return m;
}

// File format: header `slp v=<v> kind=<zeta|moebius|unknown>`, then one
// statement per line, `add T S` or `sub T S`.  '#' starts a comment.
inline Slp parse_slp(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = detail::tokenize_line(line);
        if (tokens.empty()) continue;
        rows.push_back(std::move(tokens));
    }
    if (rows.empty()) throw ParseError("missing slp header line");

    const auto& header = rows[0];
    if (header.size() != 3 || header[0] != "slp" || header[1].rfind("v=", 0) != 0 ||
        header[2].rfind("kind=", 0) != 0)
        throw ParseError("malformed slp header: expected `slp v=<v> kind=<kind>`");
    int v = 0;
    try {
        std::size_t pos = 0;
        std::string digits = header[1].substr(2);
        v = std::stoi(digits, &pos);
        if (pos != digits.size() || v < 0) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("malformed slp header: bad width: " + header[1]);
    }
    std::string kind_str = header[2].substr(5);
    TransformKind kind;
    if (kind_str == "zeta") kind = TransformKind::zeta;
    else if (kind_str == "moebius") kind = TransformKind::moebius;
    else if (kind_str == "unknown") kind = TransformKind::unknown;
    else throw ParseError("malformed slp header: bad kind: " + kind_str);

    Slp p(v, kind);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& tokens = rows[r];
        if (tokens.size() != 3 || (tokens[0] != "add" && tokens[0] != "sub"))
            throw ParseError("malformed slp statement: expected `add T S` or `sub T S`");
        int target, source;
        try {
            std::size_t pos = 0;
            target = std::stoi(tokens[1], &pos);
            if (pos != tokens[1].size()) throw std::invalid_argument("");
            source = std::stoi(tokens[2], &pos);
            if (pos != tokens[2].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("malformed slp statement: bad element id");
        }
        try {
            p.push(tokens[0] == "add" ? StmtOp::add : StmtOp::sub, target, source);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad slp statement: ") + e.what());
        }
    }
    return p;
}

inline Slp parse_slp(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_slp(in);
}

inline std::string serialize_slp(const Slp& p) {
    std::ostringstream out;
    out << "slp v=" << p.width() << " kind=" << to_string(p.kind()) << "\n";
    for (const Statement& st : p.statements())
        out << (st.op == StmtOp::add ? "add " : "sub ") << st.target << " "
            << st.source << "\n";
    return out.str();
}

}  // namespace mobius

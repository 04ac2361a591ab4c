#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mobius/bits.hpp"

namespace mobius {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite poset given by its Hasse diagram.  The cover list must be a
// transitive reduction: construction rejects cycles, duplicate edges, and
// edges implied by other edges.  Immutable once built; safe to share across
// threads read-only.
class Poset {
public:
    Poset() = default;

    static Poset from_covers(std::vector<std::string> names,
                             std::vector<std::pair<int, int>> covers) {
        Poset p;
        p.names_ = std::move(names);
        p.covers_ = std::move(covers);
        p.build();
        return p;
    }

    int size() const { return static_cast<int>(names_.size()); }       // v
    int edge_count() const { return static_cast<int>(covers_.size()); }  // e

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int x) const { return names_[x]; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool leq(int x, int y) const { return leq_.test(x, y); }
    bool covered_by(int x, int y) const { return cover_.test(x, y); }  // x ⋖ y

    // Longest chain length from a minimal element up to x.
    int height(int x) const { return heights_[x]; }

    // Elements sorted by (height, id): a fixed linear extension.
    const std::vector<int>& linear_extension() const { return linext_; }
    // Position of x in that extension.
    int position(int x) const { return position_[x]; }

    const BitMatrix& up_rows() const { return leq_; }    // row x = {y : x ≤ y}
    const BitMatrix& down_rows() const { return geq_; }  // row y = {x : x ≤ y}

    std::vector<int> upset(int x) const { return leq_.row_members(x); }
    std::vector<int> downset(int y) const { return geq_.row_members(y); }

    // Lower covers of x, ascending.
    std::vector<int> lower_covers(int x) const { return lower_[x]; }
    std::vector<int> upper_covers(int x) const { return upper_[x]; }

private:
    void build() {
        const int v = size();
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw ParseError("empty element name");
        }
        {
            std::unordered_map<std::string_view, int> seen;
            for (int i = 0; i < v; ++i)
                if (!seen.emplace(names_[i], i).second)
                    throw ParseError("duplicate element name: " + names_[i]);
        }

        upper_.assign(v, {});
        lower_.assign(v, {});
        for (auto [x, y] : covers_) {
            if (x < 0 || x >= v || y < 0 || y >= v)
                throw ParseError("cover edge references element out of range");
            if (x == y)
                throw ParseError("cycle detected: self-cover on " + names_[x]);
            upper_[x].push_back(y);
            lower_[y].push_back(x);
        }
        {
            auto sorted = covers_;
            std::sort(sorted.begin(), sorted.end());
            auto dup = std::adjacent_find(sorted.begin(), sorted.end());
            if (dup != sorted.end())
                throw ParseError("duplicate cover edge " + names_[dup->first] +
                                 " " + names_[dup->second]);
        }
        for (int x = 0; x < v; ++x) {
            std::sort(upper_[x].begin(), upper_[x].end());
            std::sort(lower_[x].begin(), lower_[x].end());
        }

        topo_sort();

        // Reflexive-transitive closure, processed top-down so each row can
        // absorb the rows of its upper covers.
        leq_ = BitMatrix(v, v);
        for (int k = v - 1; k >= 0; --k) {
            int x = topo_[k];
            leq_.set(x, x);
            for (int y : upper_[x]) leq_.or_row_into(x, y);
        }
        geq_ = BitMatrix(v, v);
        cover_ = BitMatrix(v, v);
        for (int x = 0; x < v; ++x)
            for (int y : leq_.row_members(x)) geq_.set(y, x);
        for (auto [x, y] : covers_) cover_.set(x, y);

        // Hasse check: the closed interval [x, y] of a genuine cover edge
        // holds exactly x and y.
        for (auto [x, y] : covers_)
            if (leq_.popcount_and_with(x, geq_, y) != 2)
                throw ParseError("cover edge " + names_[x] + " " + names_[y] +
                                 " is implied transitively: input is not a Hasse diagram");

        heights_.assign(v, 0);
        for (int x : topo_)
            for (int y : upper_[x])
                heights_[y] = std::max(heights_[y], heights_[x] + 1);

        linext_.resize(v);
        for (int i = 0; i < v; ++i) linext_[i] = i;
        std::sort(linext_.begin(), linext_.end(), [this](int a, int b) {
            return std::pair(heights_[a], a) < std::pair(heights_[b], b);
        });
        position_.assign(v, 0);
        for (int i = 0; i < v; ++i) position_[linext_[i]] = i;
    }

    void topo_sort() {
        const int v = size();
        std::vector<int> indegree(v, 0);
        for (auto& [x, y] : covers_) {
            (void)x;
            ++indegree[y];
        }
        topo_.clear();
        topo_.reserve(v);
        for (int x = 0; x < v; ++x)
            if (indegree[x] == 0) topo_.push_back(x);
        for (std::size_t head = 0; head < topo_.size(); ++head) {
            for (int y : upper_[topo_[head]])
                if (--indegree[y] == 0) topo_.push_back(y);
        }
        if (static_cast<int>(topo_.size()) != v)
            throw ParseError("cycle detected in cover relation");
    }

    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> upper_, lower_;
    std::vector<int> topo_, heights_, linext_, position_;
    BitMatrix leq_, geq_, cover_;
};

// Same elements, covers reversed edge-for-edge.
inline Poset dual(const Poset& p) {
    std::vector<std::pair<int, int>> covers;
    covers.reserve(p.covers().size());
    for (auto [x, y] : p.covers()) covers.emplace_back(y, x);
    return Poset::from_covers(p.names(), std::move(covers));
}

namespace detail {

// Strips the '#' comment and splits on whitespace.
inline std::vector<std::string> tokenize_line(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(std::move(tok));
    return tokens;
}

}  // namespace detail

// Line-oriented poset file: '#' starts a comment, `elem NAME` declares an
// element, `cover A B` declares A ⋖ B.  Elements are created in order of
// first appearance.
inline Poset parse_poset(std::istream& in) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> ids;
    std::vector<std::pair<int, int>> covers;

    auto intern = [&](const std::string& name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(names.size());
        names.push_back(name);
        ids.emplace(name, id);
        return id;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = detail::tokenize_line(line);
        if (tokens.empty()) continue;
        const std::string& kw = tokens[0];
        if (kw == "elem") {
            if (tokens.size() != 2)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": elem takes exactly one name");
            if (ids.count(tokens[1]))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": duplicate element name: " + tokens[1]);
            intern(tokens[1]);
        } else if (kw == "cover") {
            if (tokens.size() != 3)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": cover takes exactly two names");
            int x = intern(tokens[1]);
            int y = intern(tokens[2]);
            covers.emplace_back(x, y);
        } else {
            throw ParseError("line " + std::to_string(lineno) +
                             ": unknown directive: " + kw);
        }
    }
    return Poset::from_covers(std::move(names), std::move(covers));
}

inline Poset parse_poset(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_poset(in);
}

inline std::string serialize_poset(const Poset& p) {
    std::ostringstream out;
    for (int x = 0; x < p.size(); ++x) out << "elem " << p.name(x) << "\n";
    for (auto [x, y] : p.covers())
        out << "cover " << p.name(x) << " " << p.name(y) << "\n";
    return out.str();
}

}  // namespace mobius

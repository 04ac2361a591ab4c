// Acceptance suite: runs every shipping criterion end-to-end and prints one
// PASS/FAIL line per criterion.  Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mobius/cli.hpp"
#include "mobius/generators.hpp"
#include "mobius/labeling.hpp"
#include "mobius/lattice.hpp"
#include "mobius/oracle.hpp"
#include "mobius/poset.hpp"
#include "mobius/slp.hpp"
#include "mobius/transforms.hpp"

using namespace mobius;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& msg) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
    void note(const std::string& msg) {
        if (detail.empty()) detail = msg;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string run_cli(std::vector<std::string> args, const std::string& stdin_text,
                    int expect_code) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = cli::run_command(std::move(args), in, out, err);
    if (code != expect_code)
        throw std::runtime_error("cli exited " + std::to_string(code) + " (expected " +
                                 std::to_string(expect_code) + "): " + err.str());
    return out.str();
}

struct NamedPoset {
    std::string name;
    Poset poset;
};

// The instance list named by the length criterion; reused downstream.
std::vector<NamedPoset> length_corpus() {
    std::vector<NamedPoset> out;
    for (int v = 2; v <= 64; ++v)
        out.push_back({"chain" + std::to_string(v), gen_chain(v)});
    for (int n = 0; n <= 8; ++n)
        out.push_back({"boolean" + std::to_string(n), gen_boolean(n)});
    for (long long d : {12LL, 30LL, 360LL, 1024LL})
        out.push_back({"divisor" + std::to_string(d), gen_divisor(d)});
    for (int m = 3; m <= 5; ++m)
        out.push_back({"partition" + std::to_string(m), gen_partition(m)});
    out.push_back({"figure1", gen_figure1()});
    return out;
}

std::vector<std::int64_t> random_vector(int v, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
    std::vector<std::int64_t> out(v);
    for (auto& value : out) value = dist(rng);
    return out;
}

// Criterion 1: figure1 zeta program, byte-identical to the golden file.
Check criterion1() {
    Check c;
    std::string poset_text = run_cli({"gen", "figure1"}, "", 0);
    std::string got = run_cli(
        {"compile", "-", "--algorithm", "zeta-bjorklund", "--order", "height"},
        poset_text, 0);
    std::string golden = read_file(std::string(GOLDEN_DIR) + "/figure1_zeta.slp");
    if (got != golden) c.fail("compiled program differs from golden file");
    Slp prog = parse_slp(got);
    if (prog.length() != 9) c.fail("expected 9 additions");
    if (!verify_slp(gen_figure1(), prog, TransformKind::zeta).ok)
        c.fail("program does not compute zeta");
    c.note("9 additions, golden bytes match, oracle verified");
    return c;
}

// Criterion 2: figure1 mobius program, phases reversed, golden bytes.
Check criterion2() {
    Check c;
    std::string poset_text = run_cli({"gen", "figure1"}, "", 0);
    std::string got = run_cli(
        {"compile", "-", "--algorithm", "mobius-bjorklund", "--order", "height"},
        poset_text, 0);
    std::string golden = read_file(std::string(GOLDEN_DIR) + "/figure1_mobius.slp");
    if (got != golden) c.fail("compiled program differs from golden file");
    Slp prog = parse_slp(got);
    if (prog.length() != 9) c.fail("expected 9 subtractions");
    if (!verify_slp(gen_figure1(), prog, TransformKind::moebius).ok)
        c.fail("program does not compute moebius");
    c.note("9 subtractions, golden bytes match, oracle verified");
    return c;
}

// Criterion 3: height-ordered compilers emit exactly e statements, all on
// cover edges, across the named families.
Check criterion3() {
    Check c;
    int instances = 0;
    for (const auto& [name, poset] : length_corpus()) {
        LatticeInfo lat = lattice_structure(poset);
        JirOrder ord = order_by_height(lat);
        for (const Slp& prog :
             {compile_zeta_bjorklund(lat, ord), compile_mobius_bjorklund(lat, ord)}) {
            if (prog.length() != static_cast<std::size_t>(poset.edge_count())) {
                c.fail(name + ": length " + std::to_string(prog.length()) + " != e=" +
                       std::to_string(poset.edge_count()));
                continue;
            }
            for (const Statement& st : prog.statements())
                if (!poset.covered_by(st.source, st.target)) {
                    c.fail(name + ": statement off the Hasse diagram");
                    break;
                }
        }
        ++instances;
    }
    c.note(std::to_string(instances) + " instances, zeta+moebius each of length e");
    return c;
}

// Criterion 4: the cover condition coincides with geometric on every lattice
// among the exhaustively enumerated posets on <= 6 elements, and on every
// length-corpus instance.  Enumerating relations on pairs (i < j) visits a
// natural labeling of every poset on m elements, since each poset has some
// linear extension.
Check criterion4() {
    Check c;
    long long posets = 0, lattices = 0;
    for (int m = 1; m <= 6; ++m) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) slots.emplace_back(i, j);
        std::vector<std::string> names;
        for (int i = 0; i < m; ++i) names.push_back(std::to_string(i));

        for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
            std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (mask >> s & 1) rel[slots[s].first][slots[s].second] = true;
            bool transitive = true;
            for (int i = 0; i < m && transitive; ++i)
                for (int j = i + 1; j < m && transitive; ++j)
                    for (int k = j + 1; k < m; ++k)
                        if (rel[i][j] && rel[j][k] && !rel[i][k]) {
                            transitive = false;
                            break;
                        }
            if (!transitive) continue;
            ++posets;
            std::vector<std::pair<int, int>> covers;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    if (!rel[i][j]) continue;
                    bool direct = true;
                    for (int k = i + 1; k < j; ++k)
                        if (rel[i][k] && rel[k][j]) {
                            direct = false;
                            break;
                        }
                    if (direct) covers.emplace_back(i, j);
                }
            Poset p = Poset::from_covers(names, covers);
            try {
                LatticeInfo lat = lattice_structure(p);
                ++lattices;
                if (satisfies_cover_condition(lat) != is_geometric(lat))
                    c.fail("equivalence fails on an enumerated " + std::to_string(m) +
                           "-element lattice, mask " + std::to_string(mask));
            } catch (const NotALatticeError&) {
            }
        }
    }
    for (const auto& [name, poset] : length_corpus()) {
        LatticeInfo lat = lattice_structure(poset);
        if (satisfies_cover_condition(lat) != is_geometric(lat))
            c.fail("equivalence fails on " + name);
    }
    c.note(std::to_string(posets) + " posets enumerated, " + std::to_string(lattices) +
           " lattices checked, plus the generator corpus");
    return c;
}

// Criterion 5: both compilers match the exact matrices under 5 random
// orders per instance.
Check criterion5() {
    Check c;
    int programs = 0;
    for (const auto& [name, poset] : length_corpus()) {
        LatticeInfo lat = lattice_structure(poset);
        TransformMatrix z = zeta_matrix(poset);
        TransformMatrix m = mobius_matrix(poset);
        std::mt19937 rng(12345u + static_cast<unsigned>(poset.size()) * 31u +
                         static_cast<unsigned>(poset.edge_count()));
        for (int trial = 0; trial < 5; ++trial) {
            JirOrder ord{lat.join_irreducibles()};
            std::shuffle(ord.elements.begin(), ord.elements.end(), rng);
            if (!slp_to_matrix(compile_zeta_bjorklund(lat, ord)).same_entries(z))
                c.fail(name + ": zeta mismatch");
            if (!slp_to_matrix(compile_mobius_bjorklund(lat, ord)).same_entries(m))
                c.fail(name + ": moebius mismatch");
            programs += 2;
        }
    }
    c.note(std::to_string(programs) + " programs expanded and matched exactly");
    return c;
}

// Criterion 6: chain traversal contrast, constants pinned.
Check criterion6() {
    Check c;
    LatticeInfo c16 = lattice_structure(gen_chain(16));
    JirOrder up = order_by_height(c16);
    JirOrder down = up;
    std::reverse(down.elements.begin(), down.elements.end());
    std::size_t bottom_up = compile_zeta_bjorklund(c16, up).length();
    std::size_t top_down = compile_zeta_bjorklund(c16, down).length();
    if (bottom_up != 15) c.fail("chain16 bottom-up length != 15");
    if (top_down != 120) c.fail("chain16 top-down length != 120");

    LatticeInfo c4 = lattice_structure(gen_chain(4));
    JirOrder down4 = order_by_height(c4);
    std::reverse(down4.elements.begin(), down4.elements.end());
    if (compile_zeta_bjorklund(c4, down4).length() != 6)
        c.fail("chain4 top-down length != 6");
    c.note("bottom-up 15 = e, top-down 120 = e(e+1)/2, hand-checked 6 on chain4");
    return c;
}

// Criterion 7: the U-labeling suite.
Check criterion7() {
    Check c;
    int semimodular_count = 0;
    long long chains_checked = 0;
    for (const auto& [name, poset] : length_corpus()) {
        LatticeInfo lat = lattice_structure(poset);
        if (!is_semimodular(lat)) {
            c.fail(name + ": expected a semimodular corpus instance");
            continue;
        }
        ++semimodular_count;
        EdgeLabeling lab = semimodular_labeling(lat, order_by_height(lat));
        if (!is_u_labeling(poset, lab).ok) c.fail(name + ": min-join labeling not U");

        EdgeLabeling inj = make_injective(poset, lab);
        if (!inj.injective()) c.fail(name + ": injectivization not injective");
        if (!is_u_labeling(poset, inj).ok)
            c.fail(name + ": injectivized labeling not U");
        // rising chains must be identical pair-by-pair; chains are shared, so
        // compare each chain's rising flag under both labelings
        std::vector<std::vector<int>> chain_stack;
        for (int x = 0; x < poset.size(); ++x)
            for (int y = 0; y < poset.size(); ++y) {
                if (!poset.leq(x, y)) continue;
                std::vector<int> current;
                auto dfs = [&](auto&& self, int at) -> void {
                    if (at == y) {
                        ++chains_checked;
                        bool before = true, after = true;
                        for (std::size_t i = 1; i < current.size(); ++i) {
                            if (lab.labels[current[i - 1]] > lab.labels[current[i]])
                                before = false;
                            if (inj.labels[current[i - 1]] > inj.labels[current[i]])
                                after = false;
                        }
                        if (before != after)
                            c.fail(name + ": rising chain set changed (" +
                                   std::to_string(x) + "," + std::to_string(y) + ")");
                        return;
                    }
                    for (int idx = 0; idx < poset.edge_count(); ++idx) {
                        auto [s, t] = poset.covers()[idx];
                        if (s != at || !poset.leq(t, y)) continue;
                        current.push_back(idx);
                        self(self, t);
                        current.pop_back();
                    }
                };
                dfs(dfs, x);
            }
    }

    // pentagon: the worked labeling passes and drives a 5-operation program
    Poset pent = gen_pentagon();
    EdgeLabeling pent_lab{{1, 2, 3, 5, 4}};  // pq=1 qr=2 rs=3 pt=5 ts=4
    if (!is_u_labeling(pent, pent_lab).ok) c.fail("pentagon labeling not U");
    Slp pent_prog = compile_zeta_edges(pent, pent_lab);
    if (pent_prog.length() != 5) c.fail("pentagon program length != 5");
    if (!verify_slp(pent, pent_prog, TransformKind::zeta).ok)
        c.fail("pentagon program does not compute zeta");

    // diamond: the clashing labeling fails with witness (a, d)
    Poset diamond = Poset::from_covers({"a", "b", "c", "d"},
                                       {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    RisingChainReport bad = is_u_labeling(diamond, EdgeLabeling{{1, 2, 3, 4}});
    if (bad.ok) c.fail("diamond left labeling should fail");
    if (bad.witness != std::pair{0, 3} || bad.count(0, 3) != 2)
        c.fail("diamond witness should be (a,d) with 2 rising chains");

    c.note(std::to_string(semimodular_count) + " semimodular instances, " +
           std::to_string(chains_checked) +
           " chains compared, pentagon and diamond checks");
    return c;
}

// Criterion 8: no injective labeling of the hexagon has unique rising
// chains, and none of the edge programs computes zeta.
Check criterion8() {
    Check c;
    Poset hex = gen_hexagon();
    TransformMatrix z = zeta_matrix(hex);
    std::vector<long long> perm{1, 2, 3, 4, 5, 6};
    int tried = 0, u_ok = 0, verified = 0;
    do {
        EdgeLabeling lab{perm};
        ++tried;
        if (is_u_labeling(hex, lab).ok) ++u_ok;
        if (slp_to_matrix(compile_zeta_edges(hex, lab)).same_entries(z)) ++verified;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (tried != 720) c.fail("expected 720 labelings");
    if (u_ok != 0) c.fail(std::to_string(u_ok) + " labelings passed the U check");
    if (verified != 0)
        c.fail(std::to_string(verified) + " edge programs computed zeta");
    c.note("720 labelings, 0 U-labelings, 0 verifying programs (the e+1 lower "
           "bound over arbitrary programs is out of scope)");
    return c;
}

// Criterion 9: the dual labeling drives a verifying 9-addition program on
// the dual lattice.
Check criterion9() {
    Check c;
    Poset fig = gen_figure1();
    LatticeInfo lat = lattice_structure(fig);
    EdgeLabeling lab = semimodular_labeling(lat, order_by_height(lat));
    Poset d = dual(fig);
    EdgeLabeling dlab = dual_labeling(lab, fig);
    if (!is_u_labeling(d, dlab).ok) c.fail("dual labeling not U on the dual");
    EdgeLabeling inj = make_injective(d, dlab);
    Slp prog = compile_zeta_edges(d, inj);
    if (prog.length() != 9) c.fail("dual program length != 9");
    if (!verify_slp(d, prog, TransformKind::zeta).ok)
        c.fail("dual program does not compute zeta");
    c.note("9 additions on the dual, oracle verified");
    return c;
}

// Criterion 10: composing each zeta program with its moebius counterpart is
// the identity on 100 random vectors, for both algorithm families.
Check criterion10() {
    Check c;
    std::vector<NamedPoset> corpus = length_corpus();
    corpus.push_back({"pentagon", gen_pentagon()});
    corpus.push_back({"hexagon", gen_hexagon()});
    corpus.push_back({"parallel2", gen_parallel_chains(2)});
    corpus.push_back({"parallel3", gen_parallel_chains(3)});
    corpus.push_back({"figure1-dual", dual(gen_figure1())});

    std::mt19937 rng(777);
    int pairs = 0;
    auto check_pair = [&](const std::string& name, const Slp& zeta, const Slp& mob) {
        for (int trial = 0; trial < 100; ++trial) {
            auto input = random_vector(zeta.width(), rng);
            if (evaluate(mob, evaluate(zeta, input)) != input) {
                c.fail(name + ": composition is not the identity");
                return;
            }
        }
        ++pairs;
    };

    for (const auto& [name, poset] : corpus) {
        LatticeInfo lat = lattice_structure(poset);
        JirOrder ord = order_by_height(lat);
        check_pair(name + "/bjorklund", compile_zeta_bjorklund(lat, ord),
                   compile_mobius_bjorklund(lat, ord));

        // the edge pair runs wherever a U-labeling is available
        EdgeLabeling lab;
        bool have_labeling = false;
        if (is_semimodular(lat)) {
            lab = make_injective(poset, semimodular_labeling(lat, ord));
            have_labeling = true;
        } else if (name == "pentagon") {
            lab = EdgeLabeling{{1, 2, 3, 5, 4}};
            have_labeling = true;
        } else if (name == "figure1-dual") {
            Poset fig = gen_figure1();
            LatticeInfo fig_lat = lattice_structure(fig);
            lab = make_injective(
                poset, dual_labeling(
                           semimodular_labeling(fig_lat, order_by_height(fig_lat)), fig));
            have_labeling = true;
        }
        if (have_labeling)
            check_pair(name + "/edges", compile_zeta_edges(poset, lab),
                       compile_mobius_edges(poset, lab));
    }
    c.note(std::to_string(pairs) + " program pairs composed to the identity");
    return c;
}

struct Criterion {
    int number;
    std::string name;
    double limit_seconds;
    std::function<Check()> body;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "figure1 zeta golden", 1.0, criterion1},
        {2, "figure1 moebius golden", 1.0, criterion2},
        {3, "length e on semimodular families", 30.0, criterion3},
        {4, "cover condition == geometric", 300.0, criterion4},
        {5, "oracle equality under random orders", 120.0, criterion5},
        {6, "chain ordering contrast", 1.0, criterion6},
        {7, "U-labeling suite", 30.0, criterion7},
        {8, "hexagon impossibility", 10.0, criterion8},
        {9, "duality", 1.0, criterion9},
        {10, "inverse composition", 60.0, criterion10},
    };

    int failures = 0;
    for (const Criterion& crit : criteria) {
        auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = crit.body();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (elapsed >= crit.limit_seconds)
            result.fail("runtime " + std::to_string(elapsed) + "s exceeds " +
                        std::to_string(crit.limit_seconds) + "s");
        char line[512];
        std::snprintf(line, sizeof(line), "%s  criterion %2d  %-38s %7.2fs  %s",
                      result.ok ? "PASS" : "FAIL", crit.number, crit.name.c_str(),
                      elapsed, result.detail.c_str());
        std::cout << line << std::endl;
        if (!result.ok) ++failures;
    }
    if (failures != 0) std::cout << failures << " criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}

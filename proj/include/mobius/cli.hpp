#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mobius/generators.hpp"
#include "mobius/labeling.hpp"
#include "mobius/lattice.hpp"
#include "mobius/oracle.hpp"
#include "mobius/poset.hpp"
#include "mobius/slp.hpp"
#include "mobius/transforms.hpp"

namespace mobius::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

inline JirOrder pick_order(const LatticeInfo& lat, const std::string& name) {
    if (name == "height") return order_by_height(lat);
    if (name == "id") return order_by_id(lat);
    if (name == "reverse-height") {
        JirOrder ord = order_by_height(lat);
        std::reverse(ord.elements.begin(), ord.elements.end());
        return ord;
    }
    throw ParseError("unknown order: " + name);
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

struct BenchRow {
    std::string family;
    int v, e;
    std::string algorithm, order;
    std::size_t length;
};

inline void print_bench_row(std::ostream& out, const BenchRow& r) {
    char ratio[32];
    std::snprintf(ratio, sizeof(ratio), "%.3f",
                  static_cast<double>(r.length) / static_cast<double>(r.e));
    char line[160];
    std::snprintf(line, sizeof(line), "%-12s %6d %6d  %-16s %-15s %7zu  %s",
                  r.family.c_str(), r.v, r.e, r.algorithm.c_str(), r.order.c_str(),
                  r.length, ratio);
    out << line << "\n";
}

}  // namespace detail

inline int run_gen(const std::string& family, const std::vector<long long>& params,
                   std::ostream& out, std::ostream& err) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw ParseError("family " + family + " takes " + std::to_string(n) +
                             " parameter(s)");
    };
    Poset p;
    if (family == "chain") {
        need(1);
        p = gen_chain(static_cast<int>(params[0]));
    } else if (family == "boolean") {
        need(1);
        p = gen_boolean(static_cast<int>(params[0]));
    } else if (family == "divisor") {
        need(1);
        p = gen_divisor(params[0]);
    } else if (family == "partition") {
        need(1);
        p = gen_partition(static_cast<int>(params[0]));
    } else if (family == "parallel-chains") {
        need(1);
        p = gen_parallel_chains(static_cast<int>(params[0]));
    } else if (family == "pentagon") {
        need(0);
        p = gen_pentagon();
    } else if (family == "hexagon") {
        need(0);
        p = gen_hexagon();
    } else if (family == "figure1") {
        need(0);
        p = gen_figure1();
    } else {
        err << "unknown family: " << family << "\n";
        return exit_usage;
    }
    out << serialize_poset(p);
    return exit_ok;
}

inline int run_analyze(const Poset& p, std::ostream& out) {
    int jir = 0;
    for (int x = 0; x < p.size(); ++x)
        if (p.lower_covers(x).size() == 1) ++jir;

    out << "v " << p.size() << "\n";
    out << "n " << jir << "\n";
    out << "e " << p.edge_count() << "\n";
    try {
        LatticeInfo lat = lattice_structure(p);
        bool atomic = is_atomic(lat);
        bool semi = is_semimodular(lat);
        bool u_semi = false;
        if (semi) {
            EdgeLabeling lab = semimodular_labeling(lat, order_by_height(lat));
            u_semi = is_u_labeling(p, lab).ok;
        }
        out << "lattice true\n";
        out << "atomic " << detail::bool_str(atomic) << "\n";
        out << "semimodular " << detail::bool_str(semi) << "\n";
        out << "geometric " << detail::bool_str(atomic && semi) << "\n";
        out << "condition1 " << detail::bool_str(satisfies_cover_condition(lat)) << "\n";
        out << "u_labelable_by_semimodular_construction " << detail::bool_str(u_semi)
            << "\n";
    } catch (const NotALatticeError& e) {
        out << "lattice false\n";
        if (e.x >= 0)
            out << "lattice_witness " << p.name(e.x) << " " << p.name(e.y) << "\n";
        out << "atomic n/a\nsemimodular n/a\ngeometric n/a\ncondition1 n/a\n";
        out << "u_labelable_by_semimodular_construction n/a\n";
    }
    return exit_ok;
}

inline int run_compile(const Poset& p, const std::string& algorithm,
                       const std::string& order, const std::string& labeling,
                       bool injectivize, std::istream& in, std::ostream& out) {
    auto edge_labeling = [&]() {
        EdgeLabeling lab;
        if (labeling == "semimodular") {
            LatticeInfo lat = lattice_structure(p);
            lab = semimodular_labeling(lat, detail::pick_order(lat, order));
        } else if (labeling.rfind("file:", 0) == 0) {
            std::string text = detail::slurp(labeling.substr(5), in);
            lab = parse_labeling(p, text);
        } else {
            throw ParseError("unknown labeling: " + labeling +
                             " (expected `semimodular` or `file:<path>`)");
        }
        if (injectivize) lab = make_injective(p, lab);
        return lab;
    };

    Slp prog(p.size());
    if (algorithm == "zeta-bjorklund") {
        LatticeInfo lat = lattice_structure(p);
        prog = compile_zeta_bjorklund(lat, detail::pick_order(lat, order));
    } else if (algorithm == "mobius-bjorklund") {
        LatticeInfo lat = lattice_structure(p);
        prog = compile_mobius_bjorklund(lat, detail::pick_order(lat, order));
    } else if (algorithm == "zeta-edges") {
        prog = compile_zeta_edges(p, edge_labeling());
    } else if (algorithm == "mobius-edges") {
        prog = compile_mobius_edges(p, edge_labeling());
    } else {
        throw ParseError("unknown algorithm: " + algorithm);
    }
    out << serialize_slp(prog);
    return exit_ok;
}

inline int run_label(const Poset& poset, bool semimodular, const std::string& file,
                     const std::string& order, bool make_dual, bool injectivize,
                     bool check, std::istream& in, std::ostream& out) {
    if (semimodular == !file.empty())
        throw ParseError("need exactly one labeling source: --semimodular or --file");
    Poset p = poset;
    EdgeLabeling lab;
    if (semimodular) {
        LatticeInfo lat = lattice_structure(p);
        lab = semimodular_labeling(lat, detail::pick_order(lat, order));
    } else {
        lab = parse_labeling(p, detail::slurp(file, in));
    }
    if (make_dual) {
        lab = dual_labeling(lab, p);
        p = dual(p);
    }
    if (injectivize) lab = make_injective(p, lab);
    if (check) {
        RisingChainReport report = is_u_labeling(p, lab);
        out << "u_labeling " << detail::bool_str(report.ok) << "\n";
        if (!report.ok) {
            auto [x, y] = report.witness;
            out << "witness " << p.name(x) << " " << p.name(y) << " count "
                << report.count(x, y) << "\n";
        }
        return report.ok ? exit_ok : exit_verify_failed;
    }
    out << serialize_labeling(p, lab);
    return exit_ok;
}

inline int run_verify(const Poset& p, const Slp& prog, const std::string& kind_flag,
                      std::ostream& out) {
    TransformKind kind;
    if (kind_flag == "zeta") kind = TransformKind::zeta;
    else if (kind_flag == "moebius" || kind_flag == "mobius") kind = TransformKind::moebius;
    else if (kind_flag.empty()) kind = prog.kind();
    else throw ParseError("unknown kind: " + kind_flag);
    if (kind == TransformKind::unknown)
        throw ParseError("program kind is unknown; pass --kind zeta|moebius");

    VerifyResult r = verify_slp(p, prog, kind);
    if (r.ok) {
        out << "ok kind=" << to_string(kind) << " length=" << prog.length() << "\n";
        return exit_ok;
    }
    out << "mismatch entry " << r.x << " " << r.y << ": got " << r.got << " want "
        << r.want << "\n";
    return exit_verify_failed;
}

inline int run_bench(std::ostream& out) {
    struct Entry {
        std::string name;
        Poset poset;
    };
    std::vector<Entry> corpus;
    corpus.push_back({"chain16", gen_chain(16)});
    corpus.push_back({"chain64", gen_chain(64)});
    corpus.push_back({"boolean4", gen_boolean(4)});
    corpus.push_back({"boolean8", gen_boolean(8)});
    corpus.push_back({"divisor360", gen_divisor(360)});
    corpus.push_back({"divisor1024", gen_divisor(1024)});
    corpus.push_back({"partition4", gen_partition(4)});
    corpus.push_back({"partition5", gen_partition(5)});
    corpus.push_back({"figure1", gen_figure1()});

    out << "family            v      e  algorithm        order            length  "
           "length/e\n";
    for (const Entry& entry : corpus) {
        LatticeInfo lat = lattice_structure(entry.poset);
        for (const std::string order : {"height", "reverse-height"}) {
            JirOrder ord = detail::pick_order(lat, order);
            Slp zeta = compile_zeta_bjorklund(lat, ord);
            detail::print_bench_row(out, {entry.name, lat.size(), lat.edge_count(),
                                          "zeta-bjorklund", order, zeta.length()});
            Slp mob = compile_mobius_bjorklund(lat, ord);
            detail::print_bench_row(out, {entry.name, lat.size(), lat.edge_count(),
                                          "mobius-bjorklund", order, mob.length()});
        }
        if (is_semimodular(lat)) {
            EdgeLabeling lab = make_injective(
                entry.poset, semimodular_labeling(lat, order_by_height(lat)));
            Slp prog = compile_zeta_edges(entry.poset, lab);
            detail::print_bench_row(out, {entry.name, lat.size(), lat.edge_count(),
                                          "zeta-edges", "semimodular", prog.length()});
        }
    }
    return exit_ok;
}

// Entry point shared by the binary and the tests; argv without the program
// name.
inline int run_command(std::vector<std::string> args, std::istream& in,
                       std::ostream& out, std::ostream& err) {
    CLI::App app{"straight-line programs for zeta and Moebius transforms on "
                 "finite posets"};
    app.require_subcommand(0, 1);

    auto* gen_cmd = app.add_subcommand("gen", "emit a poset from a named family");
    std::string family;
    std::vector<long long> params;
    gen_cmd->add_option("family", family,
                        "chain|boolean|divisor|partition|parallel-chains|"
                        "pentagon|hexagon|figure1")
        ->required();
    gen_cmd->add_option("params", params, "family parameter");

    auto* analyze_cmd = app.add_subcommand("analyze", "report structure predicates");
    std::string analyze_path;
    analyze_cmd->add_option("poset", analyze_path, "poset file (- for stdin)")
        ->required();

    auto* compile_cmd = app.add_subcommand("compile", "compile a transform program");
    std::string compile_path, algorithm, order = "height", labeling = "semimodular";
    bool injectivize = false;
    compile_cmd->add_option("poset", compile_path, "poset file (- for stdin)")
        ->required();
    compile_cmd
        ->add_option("--algorithm", algorithm,
                     "zeta-bjorklund|mobius-bjorklund|zeta-edges|mobius-edges")
        ->required();
    compile_cmd->add_option("--order", order, "height|id|reverse-height");
    compile_cmd->add_option("--labeling", labeling, "semimodular|file:<path>");
    compile_cmd->add_flag("--injectivize", injectivize,
                          "relabel injectively before compiling");

    auto* label_cmd = app.add_subcommand("label", "construct or check edge labelings");
    std::string label_path, label_file, label_order = "height";
    bool label_semimodular = false, label_dual = false, label_inj = false,
         label_check = false;
    label_cmd->add_option("poset", label_path, "poset file (- for stdin)")->required();
    label_cmd->add_flag("--semimodular", label_semimodular,
                        "construct the min-join labeling");
    label_cmd->add_option("--file", label_file, "read labeling from file");
    label_cmd->add_option("--order", label_order, "height|id|reverse-height");
    label_cmd->add_flag("--dual", label_dual, "negate onto the dual poset");
    label_cmd->add_flag("--make-injective", label_inj, "relabel injectively");
    label_cmd->add_flag("--check", label_check, "check the unique-rising-chain "
                                                "property instead of printing");

    auto* verify_cmd = app.add_subcommand("verify", "check a program against the "
                                                    "exact transform matrix");
    std::string verify_poset, verify_slp_path, kind_flag;
    verify_cmd->add_option("poset", verify_poset, "poset file (- for stdin)")
        ->required();
    verify_cmd->add_option("slp", verify_slp_path, "program file (- for stdin)")
        ->required();
    verify_cmd->add_option("--kind", kind_flag, "zeta|moebius (default: program header)");

    auto* bench_cmd = app.add_subcommand("bench", "program lengths across families");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(family, params, out, err);
        if (analyze_cmd->parsed())
            return run_analyze(parse_poset(detail::slurp(analyze_path, in)), out);
        if (compile_cmd->parsed())
            return run_compile(parse_poset(detail::slurp(compile_path, in)), algorithm,
                               order, labeling, injectivize, in, out);
        if (label_cmd->parsed())
            return run_label(parse_poset(detail::slurp(label_path, in)),
                             label_semimodular, label_file, label_order, label_dual,
                             label_inj, label_check, in, out);
        if (verify_cmd->parsed()) {
            Poset p = parse_poset(detail::slurp(verify_poset, in));
            Slp prog = parse_slp(detail::slurp(verify_slp_path, in));
            return run_verify(p, prog, kind_flag, out);
        }
        if (bench_cmd->parsed()) return run_bench(out);
        out << app.help();
        return exit_ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace mobius::cli

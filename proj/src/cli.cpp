#include "zsp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "zsp/export.hpp"
#include "zsp/factor.hpp"
#include "zsp/graph.hpp"
#include "zsp/groups.hpp"
#include "zsp/oracle.hpp"
#include "zsp/verify.hpp"

namespace zsp {

namespace {

void write_payload(const std::string& payload, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << payload;
}

RingContext context_for(u64 s, u64 p) { return build_context(s, p); }

std::vector<u64> domain_by_name(const std::string& name, const RingContext& ctx, u64 budget) {
    if (name == "all") return full_ring(ctx, budget);
    if (name == "units") return unit_group(ctx, budget);
    if (name == "sfield") return embedded_field(ctx, Side::S);
    if (name == "pfield") return embedded_field(ctx, Side::P);
    if (name == "dset") return enumerate_class(ctx, SubsetClass::DSet, budget);
    throw std::invalid_argument("unknown domain: " + name);
}

void print_analyze(const RingContext& c, u64 budget, std::ostream& out) {
    out << "s = " << c.s << "  p = " << c.p << "  N = " << c.N << "\n";
    out << "s - 1 = 2^" << c.k << " * " << c.q << "    p - 1 = 2^" << c.l << " * " << c.r
        << "    n = max(k, l) = " << c.n << "\n";
    out << "bezout: -" << c.alpha << "*" << c.s << " + " << c.beta << "*" << c.p << " = 1\n";
    out << "fixed points: u_s = " << c.u_s << "  u_p = " << c.u_p << "\n";

    auto counts = class_counts(c, budget);
    auto rep = cardinalities(c);
    out << "cells:\n";
    for (int i = 0; i < kSubsetClassCount; ++i)
        out << "  " << to_string(static_cast<SubsetClass>(i)) << " " << counts[i] << "\n";
    out << "cardinalities: multiples " << rep.n_multiples << ", off-by-one " << rep.n_offbyone
        << ", d-set " << rep.n_dset << " (kernel " << rep.n_kernel << ", cyclic d-set "
        << rep.n_dset_cyclic << ")\n";

    auto cycles = cycles_of(full_ring(c, budget), c, budget);
    std::map<u64, u64> hist;
    u64 observed = 0;
    for (const auto& cyc : cycles) {
        ++hist[cyc.length];
        observed = std::max(observed, cyc.length);
    }
    out << "cycle lengths:";
    for (auto [len, count] : hist) out << " " << len << " x" << count;
    out << "\n";
    out << "max cycle: claimed lcm(q--,r--) = " << rep.claimed_max_cycle << ", observed = "
        << observed;
    if (rep.claimed_max_cycle != observed) out << "  ** MISMATCH (observed is authoritative) **";
    out << "\n";
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"structure of the squaring map over a semiprime residue ring"};
    app.require_subcommand(1);

    u64 budget = kDefaultBudget;
    app.add_option("--budget", budget, "element budget for exhaustive operations")
        ->capture_default_str();

    u64 arg_s = 0, arg_p = 0;
    std::string format = "table";
    std::string out_path;

    auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("s", arg_s, "first prime")->required();
        cmd->add_option("p", arg_p, "second prime")->required();
    };
    auto add_io = [&](CLI::App* cmd, const std::string& default_format,
                      const std::vector<std::string>& allowed) {
        format = default_format;
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    auto* analyze = app.add_subcommand("analyze", "context, cell census and cycle histogram");
    add_pair(analyze);

    auto* partition_cmd = app.add_subcommand("partition", "per-cell census");
    add_pair(partition_cmd);
    add_io(partition_cmd, "table", {"table", "json", "csv"});

    auto* kernel_cmd = app.add_subcommand("kernel-tree", "leveled preimage tree of unity");
    add_pair(kernel_cmd);
    add_io(kernel_cmd, "csv", {"csv", "json", "dot"});

    auto* cycles_cmd = app.add_subcommand("cycles", "cycles of the squaring map over a domain");
    add_pair(cycles_cmd);
    std::string domain_name = "all";
    cycles_cmd->add_option("--domain", domain_name, "all|units|dset|sfield|pfield")
        ->check(CLI::IsMember({"all", "units", "dset", "sfield", "pfield"}))
        ->capture_default_str();
    add_io(cycles_cmd, "table", {"table", "json", "csv", "dot"});

    auto* arcmul_cmd =
        app.add_subcommand("arc-tree-mul", "multiply the kernel tree by the arc ending at a");
    add_pair(arcmul_cmd);
    u64 arc_root = 0;
    arcmul_cmd->add_option("a", arc_root, "cyclic element the result is rooted at")->required();

    auto* factor_cmd = app.add_subcommand("factor", "desk-scale factorization demos");
    std::string method = "cyclic";
    factor_cmd->add_option("--method", method, "cyclic|collision")
        ->check(CLI::IsMember({"cyclic", "collision"}))
        ->capture_default_str();
    u64 max_iter = 10000;
    factor_cmd->add_option("--max-iter", max_iter, "squaring budget for the cyclic attack")
        ->capture_default_str();
    u64 modulus = 0;
    std::vector<u64> factor_args;
    factor_cmd->add_option("N", modulus, "odd composite modulus")->required();
    factor_cmd->add_option("args", factor_args, "w (cyclic) or x y (collision)")->expected(1, 2);

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite against the oracle");
    add_pair(verify_cmd);

    auto* export_cmd = app.add_subcommand("export", "full analysis document");
    add_pair(export_cmd);
    add_io(export_cmd, "json", {"json", "dot", "csv"});

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (analyze->parsed()) {
            print_analyze(context_for(arg_s, arg_p), budget, out);
        } else if (partition_cmd->parsed()) {
            auto ctx = context_for(arg_s, arg_p);
            auto counts = class_counts(ctx, budget);
            std::ostringstream payload;
            if (format == "json") {
                nlohmann::json doc;
                for (int i = 0; i < kSubsetClassCount; ++i)
                    doc[std::string(to_string(static_cast<SubsetClass>(i)))] = counts[i];
                payload << doc.dump(2) << "\n";
            } else if (format == "csv") {
                payload << "class,count\n";
                for (int i = 0; i < kSubsetClassCount; ++i)
                    payload << to_string(static_cast<SubsetClass>(i)) << ',' << counts[i] << "\n";
            } else {
                for (int i = 0; i < kSubsetClassCount; ++i)
                    payload << to_string(static_cast<SubsetClass>(i)) << " " << counts[i] << "\n";
            }
            write_payload(payload.str(), out_path, out);
        } else if (kernel_cmd->parsed()) {
            auto ctx = context_for(arg_s, arg_p);
            auto tree = tree_of(1, ctx.n, ctx);
            std::string payload;
            if (format == "json")
                payload = tree_json(tree).dump(2) + "\n";
            else if (format == "dot")
                payload = tree_dot(tree);
            else
                payload = tree_csv(tree);
            write_payload(payload, out_path, out);
        } else if (cycles_cmd->parsed()) {
            auto ctx = context_for(arg_s, arg_p);
            auto cycles = cycles_of(domain_by_name(domain_name, ctx, budget), ctx, budget);
            std::string payload;
            if (format == "json")
                payload = cycles_json(cycles).dump(2) + "\n";
            else if (format == "csv")
                payload = cycles_csv(cycles);
            else if (format == "dot")
                payload = cycles_dot(cycles);
            else {
                std::ostringstream text;
                for (size_t i = 0; i < cycles.size(); ++i) {
                    const auto& cyc = cycles[i];
                    text << "cycle " << i << ": length " << cyc.length << ", mu " << cyc.s_period
                         << " x" << cyc.s_laps << ", nu " << cyc.p_period << " x" << cyc.p_laps
                         << ", nodes";
                    for (u64 w : cyc.nodes) text << " " << w;
                    text << "\n";
                }
                payload = text.str();
            }
            write_payload(payload, out_path, out);
        } else if (arcmul_cmd->parsed()) {
            auto ctx = context_for(arg_s, arg_p);
            auto kernel_tree = tree_of(1, ctx.n, ctx);
            auto arc = arc_of(arc_root, ctx.n, ctx);
            auto product = arc_tree_mul(arc, kernel_tree, ctx);
            auto direct = tree_of(arc_root, ctx.n, ctx);
            out << "arc:";
            for (u64 a : arc.nodes) out << " " << a;
            out << "\n" << tree_csv(product);
            out << (product.levels == direct.levels && product.parent == direct.parent
                        ? "matches the directly built tree\n"
                        : "DOES NOT match the directly built tree\n");
        } else if (factor_cmd->parsed()) {
            FactorResult res;
            if (method == "cyclic") {
                if (factor_args.size() != 1)
                    throw std::invalid_argument("cyclic attack takes: N w");
                res = cyclic_attack(modulus, factor_args[0], max_iter);
            } else {
                if (factor_args.size() != 2)
                    throw std::invalid_argument("collision takes: N x y");
                res = collision_factor(modulus, factor_args[0], factor_args[1]);
            }
            if (res.factor)
                out << "factor " << *res.factor << " (cofactor " << modulus / *res.factor
                    << ", iterations " << res.iterations << ")\n";
            else
                out << "no factor found (iterations " << res.iterations << ")\n";
        } else if (verify_cmd->parsed()) {
            auto ctx = context_for(arg_s, arg_p);
            auto results = verify_pair(ctx, budget);
            size_t failed = 0;
            for (const auto& res : results) {
                out << (res.ok ? "ok   " : "FAIL ") << res.name;
                if (!res.detail.empty()) out << ": " << res.detail;
                out << "\n";
                if (!res.ok) ++failed;
            }
            if (failed) {
                out << failed << " check(s) failed\n";
                return 2;
            }
            out << "all " << results.size() << " checks passed\n";
        } else if (export_cmd->parsed()) {
            auto ctx = context_for(arg_s, arg_p);
            std::string payload;
            if (format == "dot")
                payload = export_dot(ctx, budget);
            else if (format == "csv")
                payload = export_csv(ctx, budget);
            else
                payload = export_json(ctx, budget).dump(2) + "\n";
            write_payload(payload, out_path, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace zsp

#include "zsp/export.hpp"

#include <sstream>

namespace zsp {

using nlohmann::json;

namespace {

json cycle_json(const CycleRecord& c) {
    return json{{"nodes", c.nodes},
                {"mu", c.s_period},
                {"nu", c.p_period},
                {"laps", {{"s", c.s_laps}, {"p", c.p_laps}}}};
}

}  // namespace

nlohmann::json tree_json(const RootedTree& tree) {
    json t;
    t["root"] = tree.root;
    t["height"] = tree.height;
    t["levels"] = tree.levels;
    std::vector<std::pair<u64, u64>> parents(tree.parent.begin(), tree.parent.end());
    std::sort(parents.begin(), parents.end());
    json par = json::array();
    for (auto& [child, parent] : parents) par.push_back(json::array({child, parent}));
    t["parent"] = std::move(par);
    return t;
}

std::string tree_csv(const RootedTree& tree) {
    std::ostringstream out;
    out << "value,level,parent\n";
    for (u32 i = 0; i < tree.levels.size(); ++i)
        for (u64 w : tree.levels[i]) {
            out << w << ',' << i << ',';
            if (i > 0) out << tree.parent.at(w);
            out << '\n';
        }
    return out.str();
}

std::string tree_dot(const RootedTree& tree) {
    std::ostringstream out;
    out << "digraph tree {\n";
    out << "  " << tree.root << ";\n";
    for (u32 i = 1; i < tree.levels.size(); ++i)
        for (u64 w : tree.levels[i]) out << "  " << w << " -> " << tree.parent.at(w) << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json cycles_json(const std::vector<CycleRecord>& cycles) {
    json arr = json::array();
    for (const auto& c : cycles) arr.push_back(cycle_json(c));
    return arr;
}

std::string cycles_csv(const std::vector<CycleRecord>& cycles) {
    std::ostringstream out;
    out << "cycle,pos,node,mu,nu,s_laps,p_laps\n";
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t t = 0; t < cycles[i].nodes.size(); ++t)
            out << i << ',' << t << ',' << cycles[i].nodes[t] << ',' << cycles[i].s_period << ','
                << cycles[i].p_period << ',' << cycles[i].s_laps << ',' << cycles[i].p_laps << '\n';
    return out.str();
}

std::string cycles_dot(const std::vector<CycleRecord>& cycles) {
    std::ostringstream out;
    out << "digraph cycles {\n";
    for (const auto& c : cycles)
        for (size_t t = 0; t < c.nodes.size(); ++t)
            out << "  " << c.nodes[t] << " -> " << c.nodes[(t + 1) % c.nodes.size()] << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json export_json(const RingContext& ctx, u64 budget) {
    auto graph = build_graph(full_ring(ctx, budget), ctx, budget);
    auto counts = class_counts(ctx, budget);

    json doc;
    doc["schema_version"] = "1";
    doc["s"] = ctx.s;
    doc["p"] = ctx.p;
    doc["context"] = {{"N", ctx.N},     {"k", ctx.k},       {"q", ctx.q},  {"l", ctx.l},
                      {"r", ctx.r},     {"alpha", ctx.alpha}, {"beta", ctx.beta},
                      {"u_s", ctx.u_s}, {"u_p", ctx.u_p},   {"n", ctx.n}};
    json part;
    for (int i = 0; i < kSubsetClassCount; ++i)
        part[std::string(to_string(static_cast<SubsetClass>(i)))] = counts[i];
    doc["partition"] = std::move(part);
    doc["cycles"] = cycles_json(graph.cycles);

    json trees = json::array();
    for (const auto& cyc : graph.cycles)
        for (u64 root : [&] {
                 std::vector<u64> sorted = cyc.nodes;
                 std::sort(sorted.begin(), sorted.end());
                 return sorted;
             }())
            trees.push_back(tree_json(tree_of(root, ctx.n, ctx)));
    doc["trees"] = std::move(trees);
    return doc;
}

std::string export_dot(const RingContext& ctx, u64 budget) {
    auto graph = build_graph(full_ring(ctx, budget), ctx, budget);
    std::ostringstream out;
    out << "digraph squaring {\n";
    for (const auto& c : graph.cycles)
        for (size_t t = 0; t < c.nodes.size(); ++t)
            out << "  " << c.nodes[t] << " -> " << c.nodes[(t + 1) % c.nodes.size()] << ";\n";
    for (size_t i = 0; i < graph.nodes.size(); ++i)
        if (!graph.cyclic[i])
            out << "  " << graph.nodes[i] << " -> " << graph.nodes[graph.succ[i]] << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_csv(const RingContext& ctx, u64 budget) {
    auto graph = build_graph(full_ring(ctx, budget), ctx, budget);
    std::ostringstream out;
    out << "w,successor,class,cyclic,tree_root\n";
    for (size_t i = 0; i < graph.nodes.size(); ++i) {
        u64 w = graph.nodes[i];
        out << w << ',' << graph.nodes[graph.succ[i]] << ',' << to_string(classify(w, ctx)) << ','
            << int(graph.cyclic[i]) << ',' << graph.tree_root[i] << '\n';
    }
    return out.str();
}

}  // namespace zsp

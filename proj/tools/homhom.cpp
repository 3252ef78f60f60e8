// homhom: classify graphs against the connected-homomorphism-homogeneity
// classes, compare pairs, compute cores and sweep all small graphs.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>

#include "homhom/graph_io.hpp"
#include "homhom/report.hpp"

using namespace homhom;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInputError = 2, kBudget = 3 };

struct GraphSources {
    std::vector<std::string> g6;
    std::vector<std::string> edge_files;
    std::vector<std::vector<std::string>> families;

    void attach(CLI::App* cmd, bool families_only = false)
    {
        if (!families_only) {
            cmd->add_option("--g6", g6, "graph6 string (repeatable)");
            cmd->add_option("--edges", edge_files, "edge-list file, '-' for stdin (repeatable)");
        }
        cmd->add_option("--family", families, "named family: NAME [PARAMS...] (repeatable)")
            ->expected(1, CLI::detail::expected_max_vector_size)
            ->allow_extra_args();
    }
};

std::string read_stream(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path)
{
    if (path == "-")
        return read_stream(std::cin);
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return read_stream(in);
}

Graph family_graph(const std::vector<std::string>& spec)
{
    FamilyDescriptor desc{family_tag_from_name(spec.at(0)), {}};
    for (std::size_t i = 1; i < spec.size(); ++i) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(spec[i], &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != spec[i].size())
            throw std::invalid_argument("family parameter '" + spec[i] + "' is not an integer");
        desc.params.push_back(value);
    }
    return make(desc);
}

// Graphs in the order --g6..., --edges..., --family...; stdin when none given.
std::vector<Graph> load_graphs(const GraphSources& src)
{
    std::vector<Graph> out;
    for (const auto& s : src.g6)
        out.push_back(parse_graph6(s));
    for (const auto& f : src.edge_files)
        out.push_back(parse_edge_list(read_file(f)));
    for (const auto& fam : src.families)
        out.push_back(family_graph(fam));
    if (out.empty())
        out.push_back(parse_graph_auto(read_stream(std::cin)));
    return out;
}

std::vector<ClassQuery> parse_class_list(const std::string& text)
{
    if (text.empty())
        return {std::begin(kConnectedClasses), std::end(kConnectedClasses)};
    std::vector<ClassQuery> chosen;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::transform(item.begin(), item.end(), item.begin(), [](unsigned char c) { return std::toupper(c); });
        ClassQuery q = parse_class(item);
        if (std::find(std::begin(kConnectedClasses), std::end(kConnectedClasses), q) == std::end(kConnectedClasses))
            throw std::invalid_argument("class '" + item + "' is not one of C-II, C-MI, C-HI, C-IH, C-MH, C-HH");
        chosen.push_back(q);
    }
    // Canonical order regardless of how the list was written.
    std::vector<ClassQuery> out;
    for (const auto& q : kConnectedClasses)
        if (std::find(chosen.begin(), chosen.end(), q) != chosen.end())
            out.push_back(q);
    return out;
}

OracleBudget budget_from_env(bool force)
{
    OracleBudget b;
    if (const char* env = std::getenv("HOMHOM_BUDGET"))
        b = parse_budget(env, b);
    if (force) {
        b.max_order_homo = kMaxVertices;
        b.max_order_iso = kMaxVertices;
    }
    return b;
}

int cmd_classify(const GraphSources& src, const std::string& classes, bool no_oracle, bool force)
{
    auto graphs = load_graphs(src);
    if (graphs.size() != 1)
        throw std::invalid_argument("classify takes exactly one graph");
    ClassifyOptions opts;
    opts.classes = parse_class_list(classes);
    opts.run_oracle = !no_oracle;
    opts.budget = budget_from_env(force);
    // Over-budget classes are reported as oracle_error; that is not a failure.
    ClassReport report = classify(graphs[0], opts);
    std::cout << to_json(report, graphs[0]).dump(2) << '\n';
    return report.mismatch() ? kMismatch : kOk;
}

int cmd_symmetric(const GraphSources& src, const std::string& cls, bool force)
{
    auto graphs = load_graphs(src);
    if (graphs.size() != 2)
        throw std::invalid_argument("symmetric takes exactly two graphs");
    std::string upper = cls;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    const ClassQuery q = parse_class(upper);
    const Graph& g1 = graphs[0];
    const Graph& g2 = graphs[1];

    Json recognizer = nullptr;
    if (q == kCHH && is_connected(g1) && is_connected(g2) && is_chh_connected(g1) && is_chh_connected(g2))
        recognizer = chh_symmetric(g1, g2);

    SymmetricVerdict v = c_xy_symmetric(g1, g2, q, budget_from_env(force));
    auto direction = [](const Verdict& d) {
        return Json{{"holds", d.holds}, {"witness", d.witness ? to_json(*d.witness) : Json(nullptr)}};
    };
    const bool mismatch = recognizer.is_boolean() && recognizer.get<bool>() != v.holds;
    Json out{
        {"class", class_name(q)},
        {"graphs", {to_graph6(g1), to_graph6(g2)}},
        {"recognizer", recognizer},
        {"oracle", v.holds},
        {"forward", direction(v.forward)},
        {"backward", direction(v.backward)},
        {"mismatch", mismatch},
    };
    std::cout << out.dump(2) << '\n';
    return mismatch ? kMismatch : kOk;
}

int cmd_core(const GraphSources& src, bool force)
{
    auto graphs = load_graphs(src);
    if (graphs.size() != 1)
        throw std::invalid_argument("core takes exactly one graph");
    const Graph& g = graphs[0];
    const OracleBudget b = budget_from_env(force);
    if (g.order() > b.max_order_homo)
        throw BudgetExceeded("core: order " + std::to_string(g.order()) + " exceeds budget " +
                             std::to_string(b.max_order_homo));
    CoreResult c = core_of(g);
    Json out{
        {"graph6", to_graph6(g)},
        {"core_graph6", to_graph6(c.core.graph)},
        {"core_order", c.core.graph.order()},
        {"core_vertices", c.core.original_ids},
        {"retraction", c.retraction},
    };
    std::cout << out.dump(2) << '\n';
    return kOk;
}

void print_graph(const Graph& g, const std::string& format)
{
    if (format == "edges")
        std::cout << to_edge_list(g);
    else
        std::cout << to_graph6(g) << '\n';
}

int cmd_generate(const GraphSources& src, const std::vector<std::string>& positional, const std::string& format)
{
    if (src.families.empty() && positional.empty())
        throw std::invalid_argument("generate needs FAMILY [PARAMS...] or --family NAME [PARAMS...]");
    if (!positional.empty())
        print_graph(family_graph(positional), format);
    for (const auto& fam : src.families)
        print_graph(family_graph(fam), format);
    return kOk;
}

int cmd_enumerate(int max_n, bool connected, bool force, const std::string& format)
{
    for (const auto& g : enumerate_graphs(max_n, connected, force))
        print_graph(g, format);
    return kOk;
}

int cmd_sweep(SweepOptions opts, const std::string& out_path, bool resume)
{
    std::map<std::pair<int, std::string>, Json> records;
    if (resume) {
        if (out_path.empty())
            throw std::invalid_argument("--resume needs --out");
        std::ifstream in(out_path);
        std::string line;
        while (in && std::getline(in, line)) {
            if (line.empty())
                continue;
            Json r = Json::parse(line);
            const std::string g6 = r.at("graph6").get<std::string>();
            // Keep only records this run would have produced; anything
            // lacking a requested class is recomputed.
            const Graph g = parse_graph6(g6);
            if (g.order() > opts.max_n || (opts.connected_only && !is_connected(g)))
                continue;
            bool complete = true;
            for (const auto& q : opts.classes)
                complete = complete && r.at("verdicts").contains(class_name(q));
            if (!complete)
                continue;
            opts.skip.insert(g6);
            records.emplace(sweep_order_key(g6), std::move(r));
        }
    }
    for (auto& r : run_sweep(opts)) {
        const std::string g6 = r.at("graph6").get<std::string>();
        records.emplace(sweep_order_key(g6), std::move(r));
    }

    std::vector<Json> ordered;
    for (auto& [key, r] : records)
        ordered.push_back(std::move(r));
    Json summary = sweep_summary(ordered, opts.classes);
    summary["max_n"] = opts.max_n;
    summary["connected_only"] = opts.connected_only;

    if (out_path.empty()) {
        for (const auto& r : ordered)
            std::cout << r.dump() << '\n';
        std::cerr << summary.dump() << '\n';
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out)
            throw std::invalid_argument("cannot write '" + out_path + "'");
        for (const auto& r : ordered)
            out << r.dump() << '\n';
        std::cout << summary.dump() << '\n';
    }
    return summary.at("mismatches").get<int>() > 0 ? kMismatch : kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Connected-homomorphism-homogeneity classifier for finite graphs"};
    app.require_subcommand(1);

    GraphSources classify_src, symmetric_src, core_src, generate_src;
    std::vector<std::string> generate_positional;
    std::string classes, sym_class = "C-HH", format = "g6", out_path;
    bool no_oracle = false, force = false, resume = false, connected = false, timings = false;
    int max_n = 6;
    int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

    auto* classify_cmd = app.add_subcommand("classify", "recognizer and oracle verdicts for one graph");
    classify_src.attach(classify_cmd);
    classify_cmd->add_option("--classes", classes, "comma-separated subset, e.g. C-II,C-HH");
    classify_cmd->add_flag("--no-oracle", no_oracle, "recognizers only");
    classify_cmd->add_flag("--force", force, "ignore the oracle order budget");

    auto* sweep_cmd = app.add_subcommand("sweep", "classify every graph up to a given order");
    sweep_cmd->add_option("--max-n", max_n, "largest order (default 6; 8 needs --force)");
    sweep_cmd->add_option("--classes", classes, "comma-separated subset, e.g. C-HH");
    sweep_cmd->add_option("--jobs", jobs, "worker threads");
    sweep_cmd->add_option("--out", out_path, "JSON-lines output file (default stdout)");
    sweep_cmd->add_flag("--resume", resume, "keep records already in --out and skip their graphs");
    sweep_cmd->add_flag("--connected", connected, "connected graphs only");
    sweep_cmd->add_flag("--force", force, "allow order 8 and skip over-budget oracle runs");
    sweep_cmd->add_flag("--timings", timings, "add elapsed_us to each record (output no longer reproducible)");

    auto* sym_cmd = app.add_subcommand("symmetric", "symmetry of two graphs for a class");
    symmetric_src.attach(sym_cmd);
    sym_cmd->add_option("--class", sym_class, "class, default C-HH");
    sym_cmd->add_flag("--force", force, "ignore the oracle order budget");

    auto* core_cmd = app.add_subcommand("core", "core and retraction of one graph");
    core_src.attach(core_cmd);
    core_cmd->add_flag("--force", force, "ignore the order budget");

    auto* gen_cmd = app.add_subcommand("generate", "print named family members");
    generate_src.attach(gen_cmd, true);
    gen_cmd->add_option("spec", generate_positional, "FAMILY [PARAMS...]");
    gen_cmd->add_option("--format", format, "g6 (alias graph6) or edges")->check(CLI::IsMember({"g6", "graph6", "edges"}));

    auto* enum_cmd = app.add_subcommand("enumerate", "print one graph per isomorphism class");
    enum_cmd->add_option("--max-n", max_n, "largest order (default 6; 8 needs --force)");
    enum_cmd->add_flag("--connected", connected, "connected graphs only");
    enum_cmd->add_flag("--force", force, "allow order 8");
    enum_cmd->add_option("--format", format, "g6 (alias graph6) or edges")->check(CLI::IsMember({"g6", "graph6", "edges"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*classify_cmd)
            return cmd_classify(classify_src, classes, no_oracle, force);
        if (*sym_cmd)
            return cmd_symmetric(symmetric_src, sym_class, force);
        if (*core_cmd)
            return cmd_core(core_src, force);
        if (*gen_cmd)
            return cmd_generate(generate_src, generate_positional, format);
        if (*enum_cmd)
            return cmd_enumerate(max_n, connected, force, format);
        if (*sweep_cmd) {
            SweepOptions opts;
            opts.max_n = max_n;
            opts.connected_only = connected;
            opts.classes = parse_class_list(classes);
            opts.jobs = jobs;
            opts.force = force;
            opts.timings = timings;
            opts.budget = budget_from_env(false);
            return cmd_sweep(opts, out_path, resume);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed record in resumed file: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

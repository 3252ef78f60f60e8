#include "homhom/report.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "homhom/graph_io.hpp"

namespace homhom {

namespace {

    Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

    Json recognizer_json(Decision d)
    {
        switch (d) {
        case Decision::Yes:
            return true;
        case Decision::No:
            return false;
        case Decision::OracleOnly:
            break;
        }
        return nullptr;
    }

    std::string decision_label(Decision d)
    {
        switch (d) {
        case Decision::Yes:
            return "yes";
        case Decision::No:
            return "no";
        case Decision::OracleOnly:
            break;
        }
        return "oracle-only";
    }

    int parse_int(std::string_view s)
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size() || value < 1)
            throw std::invalid_argument("budget: expected a positive integer, got '" + std::string(s) + "'");
        return value;
    }

} // namespace

Json to_json(const PartialMap& f)
{
    Json pairs = Json::array();
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] != kUnmapped)
            pairs.push_back({static_cast<int>(v), f[v]});
    return pairs;
}

Json to_json(const Witness& w)
{
    return Json{
        {"source", w.source.to_vector()},
        {"map", to_json(w.map)},
        {"blocked", w.blocked ? Json(*w.blocked) : Json(nullptr)},
    };
}

Json to_json(const ClassReport& report, const Graph& g)
{
    Json classes = Json::object();
    for (const auto& e : report.entries) {
        classes[class_name(e.query)] = Json{
            {"recognizer", decision_label(e.recognizer)},
            {"known", optional_bool(e.known)},
            {"facts", e.facts},
            {"family", e.family ? Json(*e.family) : Json(nullptr)},
            {"oracle", optional_bool(e.oracle)},
            {"oracle_exhaustive", e.oracle_exhaustive},
            {"oracle_error", e.oracle_error ? Json(*e.oracle_error) : Json(nullptr)},
            {"witness", e.witness ? to_json(*e.witness) : Json(nullptr)},
            {"mismatch", e.mismatch()},
        };
    }
    return Json{
        {"graph6", to_graph6(g)},
        {"n", g.order()},
        {"classes", classes},
        {"mismatch", report.mismatch()},
    };
}

OracleBudget parse_budget(const std::string& text, OracleBudget base)
{
    if (text.find('=') == std::string::npos) {
        const int all = parse_int(text);
        base.max_order_homo = all;
        base.max_order_iso = all;
        return base;
    }
    std::string_view rest = text;
    for (bool more = true; more;) {
        auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        more = comma != std::string_view::npos;
        if (more)
            rest = rest.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("budget: expected key=value, got '" + std::string(item) + "'");
        auto key = item.substr(0, eq);
        const int value = parse_int(item.substr(eq + 1));
        if (key == "homo")
            base.max_order_homo = value;
        else if (key == "iso")
            base.max_order_iso = value;
        else
            throw std::invalid_argument("budget: unknown key '" + std::string(key) + "'");
    }
    return base;
}

Json sweep_record(const Graph& g, const std::vector<ClassQuery>& classes, const OracleBudget& budget, bool force,
                  bool timings)
{
    const auto start = std::chrono::steady_clock::now();
    ClassifyOptions opts;
    opts.classes = classes;
    opts.budget = budget;
    ClassReport report = classify(g, opts);

    Json verdicts = Json::object();
    Json families = Json::array();
    Json witnesses = Json::array();
    Json skipped = Json::array();
    for (const auto& e : report.entries) {
        const std::string name = class_name(e.query);
        verdicts[name] = Json{
            {"recognizer", recognizer_json(e.recognizer)},
            {"known", optional_bool(e.known)},
            {"oracle", optional_bool(e.oracle)},
        };
        if (e.family)
            families.push_back(name + ":" + *e.family);
        if (e.witness) {
            Json w = to_json(*e.witness);
            w["class"] = name;
            witnesses.push_back(std::move(w));
        }
        if (e.oracle_error) {
            if (!force)
                throw BudgetExceeded(*e.oracle_error);
            skipped.push_back(name);
        }
    }
    Json record{
        {"graph6", to_graph6(g)},
        {"n", g.order()},
        {"verdicts", verdicts},
        {"family_tags", families},
        {"witnesses", witnesses},
        {"budget_exceeded", skipped},
        {"mismatch", report.mismatch()},
    };
    if (timings) {
        const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        record["elapsed_us"] = us.count();
    }
    return record;
}

std::pair<int, std::string> sweep_order_key(const std::string& graph6)
{
    Graph g = parse_graph6(graph6);
    return {g.order(), canonical_form(g, kHardEnumerationBound)};
}

std::vector<Json> run_sweep(const SweepOptions& opts)
{
    auto all = enumerate_graphs(opts.max_n, opts.connected_only, opts.force);
    std::vector<Graph> todo;
    for (auto& g : all)
        if (!opts.skip.count(to_graph6(g)))
            todo.push_back(std::move(g));

    std::vector<Json> out(todo.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= todo.size())
                return;
            try {
                out[i] = sweep_record(todo[i], opts.classes, opts.budget, opts.force, opts.timings);
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure)
                    failure = std::current_exception();
                next = todo.size();
                return;
            }
        }
    };
    const int jobs = std::max(1, opts.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    // enumerate_graphs already yields (order, canonical form) order.
    return out;
}

Json sweep_summary(const std::vector<Json>& records, const std::vector<ClassQuery>& classes)
{
    Json per_class = Json::object();
    for (const auto& q : classes)
        per_class[class_name(q)] = Json{{"oracle_yes", 0}, {"recognizer_yes", 0}, {"known_yes", 0}};
    int mismatches = 0;
    for (const auto& r : records) {
        if (r.at("mismatch").get<bool>())
            ++mismatches;
        for (const auto& [name, v] : r.at("verdicts").items()) {
            if (!per_class.contains(name))
                continue;
            auto& c = per_class[name];
            if (v.at("oracle") == true)
                c["oracle_yes"] = c["oracle_yes"].get<int>() + 1;
            if (v.at("recognizer") == true)
                c["recognizer_yes"] = c["recognizer_yes"].get<int>() + 1;
            if (v.at("known") == true)
                c["known_yes"] = c["known_yes"].get<int>() + 1;
        }
    }
    return Json{
        {"graphs", static_cast<int>(records.size())},
        {"classes", per_class},
        {"mismatches", mismatches},
    };
}

} // namespace homhom

#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "homhom/recognizers.hpp"

namespace homhom {

/// Objects use std::map underneath, so dump() emits sorted keys.
using Json = nlohmann::json;

Json to_json(const Witness& w);
Json to_json(const ClassReport& report, const Graph& g);
Json to_json(const PartialMap& f);

/// "HOMHOM_BUDGET" syntax: "homo=N,iso=M" (either key may be omitted) or a
/// bare N applied to both. Throws std::invalid_argument on malformed text.
OracleBudget parse_budget(const std::string& text, OracleBudget base = {});

struct SweepOptions {
    int max_n = 6;
    bool connected_only = false;
    std::vector<ClassQuery> classes{std::begin(kConnectedClasses), std::end(kConnectedClasses)};
    int jobs = 1;
    /// Allows orders 8 and graphs beyond the oracle budget (oracle skipped).
    bool force = false;
    bool timings = false;
    OracleBudget budget{};
    /// graph6 strings to leave out (already present in a resumed file).
    std::set<std::string> skip{};
};

/// One JSON object per isomorphism class, ordered by (order, canonical form)
/// independent of the number of jobs. Throws BudgetExceeded when a graph is
/// over budget and force is off.
std::vector<Json> run_sweep(const SweepOptions& opts);

/// Record for a single graph, as emitted by run_sweep.
Json sweep_record(const Graph& g, const std::vector<ClassQuery>& classes, const OracleBudget& budget, bool force,
                  bool timings);

/// Per-class counts and the mismatch total over a set of sweep records.
Json sweep_summary(const std::vector<Json>& records, const std::vector<ClassQuery>& classes);

/// Sort key used for sweep output.
std::pair<int, std::string> sweep_order_key(const std::string& graph6);

} // namespace homhom

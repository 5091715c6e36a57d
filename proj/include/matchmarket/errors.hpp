#pragma once

#include <stdexcept>
#include <string>

namespace matchmarket {

/// Error codes for everything this library can reject.
enum class Errc {
    // instance / core
    empty_market,
    negative_value,
    capacity_mismatch,
    dimension_mismatch,
    parse_error,
    // numerics
    no_solution_found,
    indeterminate_sign,
    // demand
    infeasible_demand,
    degenerate_prices,
    // bundling
    precondition_violated,
    utility_mismatch,
    infeasible_bundle_system,
    // verification
    decomposition_failed,
    not_an_equilibrium,
    // solvers
    too_many_items,
    too_many_agents,
    incomplete_search,
    unpriced_item,
    proposal_exceeds_anchor,
    structure_inconsistent,
    non_unique_top_item,
    non_unit_capacities,
    // misc
    internal_error,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::empty_market: return "empty_market";
        case Errc::negative_value: return "negative_value";
        case Errc::capacity_mismatch: return "capacity_mismatch";
        case Errc::dimension_mismatch: return "dimension_mismatch";
        case Errc::parse_error: return "parse_error";
        case Errc::no_solution_found: return "no_solution_found";
        case Errc::indeterminate_sign: return "indeterminate_sign";
        case Errc::infeasible_demand: return "infeasible_demand";
        case Errc::degenerate_prices: return "degenerate_prices";
        case Errc::precondition_violated: return "precondition_violated";
        case Errc::utility_mismatch: return "utility_mismatch";
        case Errc::infeasible_bundle_system: return "infeasible_bundle_system";
        case Errc::decomposition_failed: return "decomposition_failed";
        case Errc::not_an_equilibrium: return "not_an_equilibrium";
        case Errc::too_many_items: return "too_many_items";
        case Errc::too_many_agents: return "too_many_agents";
        case Errc::incomplete_search: return "incomplete_search";
        case Errc::unpriced_item: return "unpriced_item";
        case Errc::proposal_exceeds_anchor: return "proposal_exceeds_anchor";
        case Errc::structure_inconsistent: return "structure_inconsistent";
        case Errc::non_unique_top_item: return "non_unique_top_item";
        case Errc::non_unit_capacities: return "non_unit_capacities";
        case Errc::internal_error: return "internal_error";
    }
    return "unknown";
}

/// The library's single exception type. Expected branches (LP status,
/// solver reports, verification verdicts) are returned as values, not
/// thrown; MarketError signals misuse or inputs outside a contract.
class MarketError : public std::runtime_error {
public:
    MarketError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw MarketError(code, what);
}

} // namespace matchmarket

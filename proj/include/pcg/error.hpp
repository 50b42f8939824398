#pragma once

#include <stdexcept>
#include <string>

namespace pcg {

// Library-wide failure kinds. Every throwing operation documents which of
// these it can raise; tests match on kind() rather than message text.
enum class errc {
    not_a_unit,
    out_of_range,
    not_prime,
    not_irreducible,
    zero_element,
    zero_to_zero,
    illegal_move,
    precondition_violated,
    zero_invariant,
    search_budget_exceeded,
    wrong_region,
    unsupported_losing_set,
    domain_exhausted,
    spec_mismatch,
    degenerate_order,
    malformed_table,
    too_large,
};

const char* errc_name(errc k);

class error : public std::runtime_error {
  public:
    error(errc kind, const std::string& what)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

    errc kind() const { return kind_; }

  private:
    errc kind_;
};

} // namespace pcg

#ifndef DOUSHA_TESTS_NAIVE_HPP
#define DOUSHA_TESTS_NAIVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dousha/corpus.hpp"
#include "dousha/resolver.hpp"

namespace dousha::testing {

// Brute-force re-derivation of the resolution cascades straight from the
// raw document structure, with its own flattening and candidate scan. Kept
// deliberately naive so it can cross-check the indexed implementation on
// generated inputs.
struct NaiveResult {
  std::optional<std::string> predicted;
  std::optional<RuleId> rule;
};

NaiveResult naive_resolve(const Document& doc, const std::string& anaphor_id,
                          MethodId method,
                          std::optional<std::size_t> subject_window = std::nullopt);

// All company mention ids strictly before the anaphor, nearest first.
std::vector<std::string> naive_candidates(const Document& doc,
                                          const std::string& anaphor_id);

}  // namespace dousha::testing

#endif  // DOUSHA_TESTS_NAIVE_HPP

#pragma once

// Cross-formalism sweeps behind `tempora verify-all`.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tempora/channel.hpp"
#include "tempora/random.hpp"
#include "tempora/siggames.hpp"

namespace tempora {

inline constexpr double kEquivalenceTol = 1e-10;

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;  // worst deviation seen (0 for purely boolean checks)
  double threshold = 0.0;
  std::size_t cases = 0;
  std::string detail;
};

nlohmann::json to_json(const CheckResult& r);

CheckResult verify_causal_demo(double tol = 1e-9);
CheckResult verify_polytope();
CheckResult verify_pm_pdm(std::uint64_t seed, std::size_t n = 100, double tol = kEquivalenceTol);
CheckResult verify_histories_pdm(std::uint64_t seed, std::size_t n = 500, double tol = kEquivalenceTol);
CheckResult verify_games_pdm(std::uint64_t seed, std::size_t n = 200, double tol = kEquivalenceTol);
CheckResult verify_otoc_pdm(std::uint64_t seed, std::size_t n = 200, double tol = kEquivalenceTol);
CheckResult verify_chsh();
CheckResult verify_pdm_structure(std::uint64_t seed, std::size_t n = 100, double tol = kEquivalenceTol);
CheckResult verify_process_validity();
CheckResult verify_oscillator();

std::vector<CheckResult> verify_all(std::uint64_t seed, double tol = kEquivalenceTol);

// Random draws used by the sweeps.
struct HistoryInstance {
  CMatrix rho;
  std::vector<CMatrix> unitaries;
  std::vector<PauliString> paulis;
};
HistoryInstance random_history_instance(Rng& rng, std::size_t steps, std::size_t qubits);

// +/-1-labelled strategy on qubit X -> A -> B with trivial late question; the
// second POVM depends on lambda only.
Strategy random_correlation_strategy(Rng& rng);

}  // namespace tempora

#pragma once

#include <map>
#include <vector>

#include "tempora/qcore.hpp"

namespace tempora {

// CPTP map in Kraus form. Each Kraus operator is d_out x d_in.
struct Channel {
  std::vector<CMatrix> kraus;

  static Channel identity(std::size_t d);
  static Channel unitary(const CMatrix& u);
  // rho -> Tr(rho) 1/d
  static Channel depolarizing(std::size_t d);

  std::size_t dim_in() const;
  std::size_t dim_out() const;
  CMatrix apply(const CMatrix& rho) const;
  // Heisenberg-picture dual: O -> sum_k K_k^† O K_k.
  CMatrix apply_adjoint(const CMatrix& observable) const;
  // Throws ValidationError unless sum_k K^†K = 1 within kCheckTol.
  void validate() const;
};

// Outcome-labelled sets of Kraus operators.
struct Instrument {
  std::map<int, std::vector<CMatrix>> outcomes;

  // Luders instrument of a Pauli observable on one qubit, outcomes +1/-1.
  static Instrument pauli(int index);
  // Luders instrument of a Hermitian involution (O^2 = 1), outcomes +1/-1.
  static Instrument from_observable(const CMatrix& observable);
  // Single outcome +1 with the identity map.
  static Instrument trivial(std::size_t d);

  std::size_t dim_in() const;
  std::size_t dim_out() const;
  std::vector<int> labels() const;
  // The (unnormalised) post-measurement state for one outcome.
  CMatrix apply(int outcome, const CMatrix& rho) const;
  CMatrix apply_adjoint(int outcome, const CMatrix& observable) const;
  // Effect sum_k K_k^† K_k for one outcome.
  CMatrix effect(int outcome) const;
  // Sum over outcomes and Kraus operators of K^†K equals 1 within kCheckTol.
  void validate() const;
  // Throws ValidationError unless every label is +1 or -1.
  void require_pm_one_labels() const;
};

// Outcome-labelled effects.
struct Povm {
  std::map<int, CMatrix> effects;

  static Povm from_instrument(const Instrument& instr);
  static Povm trivial(std::size_t d);

  std::size_t dim() const;
  std::vector<int> labels() const;
  void validate() const;
};

}  // namespace tempora

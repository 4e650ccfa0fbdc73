#include "tempora/channel.hpp"

#include "tempora/errors.hpp"

namespace tempora {

Channel Channel::identity(std::size_t d) { return Channel{{CMatrix::identity(d)}}; }

Channel Channel::unitary(const CMatrix& u) {
  require_unitary(u, "channel unitary");
  return Channel{{u}};
}

Channel Channel::depolarizing(std::size_t d) {
  // Kraus operators |i><j| / sqrt(d).
  Channel ch;
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      CMatrix k(d, d);
      k(i, j) = w;
      ch.kraus.push_back(std::move(k));
    }
  return ch;
}

std::size_t Channel::dim_in() const { return kraus.empty() ? 0 : kraus.front().cols(); }
std::size_t Channel::dim_out() const { return kraus.empty() ? 0 : kraus.front().rows(); }

CMatrix Channel::apply(const CMatrix& rho) const {
  if (rho.rows() != dim_in() || rho.cols() != dim_in()) throw DimensionError("channel input dimension mismatch");
  CMatrix out(dim_out(), dim_out());
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

CMatrix Channel::apply_adjoint(const CMatrix& observable) const {
  if (observable.rows() != dim_out()) throw DimensionError("channel output dimension mismatch");
  CMatrix out(dim_in(), dim_in());
  for (const auto& k : kraus) out += k.adjoint() * observable * k;
  return out;
}

void Channel::validate() const {
  if (kraus.empty()) throw ValidationError("channel has no Kraus operators");
  CMatrix sum(dim_in(), dim_in());
  for (const auto& k : kraus) {
    if (k.rows() != dim_out() || k.cols() != dim_in()) throw ValidationError("channel Kraus shapes differ");
    sum += k.adjoint() * k;
  }
  if (max_abs_diff(sum, CMatrix::identity(dim_in())) > kCheckTol)
    throw ValidationError("channel is not trace preserving");
}

// ---------------------------------------------------------------------------

Instrument Instrument::pauli(int index) {
  Instrument in;
  in.outcomes[+1] = {pauli_projector(index, +1)};
  in.outcomes[-1] = {pauli_projector(index, -1)};
  return in;
}

Instrument Instrument::from_observable(const CMatrix& observable) {
  require_square(observable, "observable");
  const std::size_t d = observable.rows();
  if (!is_hermitian(observable, kInputTol) ||
      max_abs_diff(observable * observable, CMatrix::identity(d)) > kCheckTol)
    throw ValidationError("observable must be a Hermitian involution with eigenvalues +1/-1");
  const CMatrix id = CMatrix::identity(d);
  Instrument in;
  in.outcomes[+1] = {0.5 * (id + observable)};
  in.outcomes[-1] = {0.5 * (id - observable)};
  return in;
}

Instrument Instrument::trivial(std::size_t d) {
  Instrument in;
  in.outcomes[+1] = {CMatrix::identity(d)};
  return in;
}

std::size_t Instrument::dim_in() const {
  return outcomes.empty() || outcomes.begin()->second.empty() ? 0 : outcomes.begin()->second.front().cols();
}

std::size_t Instrument::dim_out() const {
  return outcomes.empty() || outcomes.begin()->second.empty() ? 0 : outcomes.begin()->second.front().rows();
}

std::vector<int> Instrument::labels() const {
  std::vector<int> l;
  for (const auto& [a, _] : outcomes) l.push_back(a);
  return l;
}

CMatrix Instrument::apply(int outcome, const CMatrix& rho) const {
  const auto it = outcomes.find(outcome);
  if (it == outcomes.end()) throw ValidationError("instrument has no outcome " + std::to_string(outcome));
  CMatrix out(dim_out(), dim_out());
  for (const auto& k : it->second) out += k * rho * k.adjoint();
  return out;
}

CMatrix Instrument::apply_adjoint(int outcome, const CMatrix& observable) const {
  const auto it = outcomes.find(outcome);
  if (it == outcomes.end()) throw ValidationError("instrument has no outcome " + std::to_string(outcome));
  CMatrix out(dim_in(), dim_in());
  for (const auto& k : it->second) out += k.adjoint() * observable * k;
  return out;
}

CMatrix Instrument::effect(int outcome) const {
  return apply_adjoint(outcome, CMatrix::identity(dim_out()));
}

void Instrument::validate() const {
  if (outcomes.empty()) throw ValidationError("instrument has no outcomes");
  const std::size_t din = dim_in(), dout = dim_out();
  CMatrix sum(din, din);
  for (const auto& [a, ks] : outcomes) {
    if (ks.empty()) throw ValidationError("instrument outcome " + std::to_string(a) + " has no Kraus operators");
    for (const auto& k : ks) {
      if (k.rows() != dout || k.cols() != din) throw ValidationError("instrument Kraus shapes differ");
      sum += k.adjoint() * k;
    }
  }
  if (max_abs_diff(sum, CMatrix::identity(din)) > kCheckTol) throw ValidationError("instrument is not complete");
}

void Instrument::require_pm_one_labels() const {
  for (const auto& [a, _] : outcomes)
    if (a != 1 && a != -1) throw ValidationError("correlation instruments need outcome labels +1/-1");
}

// ---------------------------------------------------------------------------

Povm Povm::from_instrument(const Instrument& instr) {
  Povm p;
  for (const auto& [a, _] : instr.outcomes) p.effects[a] = instr.effect(a);
  return p;
}

Povm Povm::trivial(std::size_t d) {
  Povm p;
  p.effects[+1] = CMatrix::identity(d);
  return p;
}

std::size_t Povm::dim() const { return effects.empty() ? 0 : effects.begin()->second.rows(); }

std::vector<int> Povm::labels() const {
  std::vector<int> l;
  for (const auto& [b, _] : effects) l.push_back(b);
  return l;
}

void Povm::validate() const {
  if (effects.empty()) throw ValidationError("POVM has no effects");
  CMatrix sum(dim(), dim());
  for (const auto& [b, e] : effects) {
    if (e.rows() != dim() || !e.is_square()) throw ValidationError("POVM effect shapes differ");
    if (!is_hermitian(e, kInputTol) || min_eigenvalue(e) < -kCheckTol)
      throw ValidationError("POVM effect " + std::to_string(b) + " is not positive semidefinite");
    sum += e;
  }
  if (max_abs_diff(sum, CMatrix::identity(dim())) > kCheckTol) throw ValidationError("POVM is not complete");
}

}  // namespace tempora

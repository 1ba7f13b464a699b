#include "minvar/enumeration.hpp"

#include <algorithm>

namespace minvar {

std::string VarietyAtom::label() const {
  switch (kind) {
    case Kind::MatrixK:
      return "M_" + std::to_string(m) + "(K)";
    case Kind::MatrixE:
      return "M_" + std::to_string(m) + "(E)";
    case Kind::MatrixAB:
      return "M_{" + std::to_string(m) + "," + std::to_string(b) + "}";
  }
  return {};
}

std::string VarietyDescriptor::label() const {
  std::string s;
  for (const auto& a : atoms) {
    if (!s.empty()) s += '.';
    s += a.label();
  }
  return s;
}

std::vector<VarietyAtom> atoms_at(const MultisetSpec& spec, long weight) {
  if (!spec.has_variety_semantics())
    throw SpecError("family '" + spec.name() + "' has no variety semantics");
  std::vector<VarietyAtom> atoms;
  auto square_root_of = [](long k) -> long {
    long s = 0;
    while ((s + 1) * (s + 1) <= k) ++s;
    return s * s == k ? s : 0;
  };
  switch (spec.family()) {
    case Family::FgCodim: {
      if (long s = square_root_of(weight))
        atoms.push_back({VarietyAtom::Kind::MatrixK, s, 0, weight});
      break;
    }
    case Family::Codim: {
      if (long s = square_root_of(weight)) {
        atoms.push_back({VarietyAtom::Kind::MatrixK, s, 0, weight});
        for (long a = 1; a <= s / 2; ++a)
          atoms.push_back({VarietyAtom::Kind::MatrixAB, a, s - a, weight});
      } else if (weight % 2 == 0) {
        if (long m = square_root_of(weight / 2))
          atoms.push_back({VarietyAtom::Kind::MatrixE, m, 0, weight});
      }
      break;
    }
    case Family::GkFg: {
      long d = spec.param();
      if ((weight - 1) % (d - 1) == 0)
        if (long m = square_root_of((weight - 1) / (d - 1)))
          atoms.push_back({VarietyAtom::Kind::MatrixK, m, 0, weight});
      break;
    }
    case Family::Gk: {
      long d = spec.param();
      if ((weight - 1) % (d - 1) == 0) {
        if (long m = square_root_of((weight - 1) / (d - 1))) {
          atoms.push_back({VarietyAtom::Kind::MatrixK, m, 0, weight});
          atoms.push_back({VarietyAtom::Kind::MatrixE, m, 0, weight});
        }
      }
      if (weight >= 2 && (weight - 2) % (d - 1) == 0) {
        long ss = (weight - 2) / (d - 1);
        for (long a = 1; 2 * a * a <= ss; ++a) {
          long bb = ss - a * a;
          if (long b = square_root_of(bb); b >= a && b * b == bb)
            atoms.push_back({VarietyAtom::Kind::MatrixAB, a, b, weight});
        }
      }
      break;
    }
    default:
      break;
  }
  return atoms;
}

CompositionStream::CompositionStream(const MultisetSpec& spec, long n) : n_(n) {
  if (n < 0) throw SpecError("composition target must be >= 0");
  for (long w : spec.support(std::max<long>(n, 1))) {
    if (w > n) break;
    mpz_class a = spec.coefficient(w);
    if (!a.fits_slong_p())
      throw SpecError("multiplicity at weight " + std::to_string(w) + " too large to enumerate");
    sup_.push_back(w);
    mult_.push_back(a.get_si());
  }
  reach_.assign(static_cast<size_t>(n) + 1, 0);
  reach_[0] = 1;
  for (long r = 1; r <= n; ++r)
    for (long w : sup_) {
      if (w > r) break;
      if (reach_[r - w]) {
        reach_[r] = 1;
        break;
      }
    }
}

void CompositionStream::descend() {
  while (rem_ > 0) {
    for (long j = 0; j < static_cast<long>(sup_.size()); ++j) {
      if (sup_[j] > rem_) break;
      if (reach_[rem_ - sup_[j]]) {
        widx_.push_back(j);
        rem_ -= sup_[j];
        break;
      }
    }
  }
}

bool CompositionStream::advance_weights() {
  while (!widx_.empty()) {
    long j = widx_.back();
    widx_.pop_back();
    rem_ += sup_[j];
    for (long j2 = j + 1; j2 < static_cast<long>(sup_.size()) && sup_[j2] <= rem_; ++j2) {
      if (reach_[rem_ - sup_[j2]]) {
        widx_.push_back(j2);
        rem_ -= sup_[j2];
        descend();
        return true;
      }
    }
  }
  return false;
}

void CompositionStream::emit(ColoredComposition& out) const {
  out.parts.resize(widx_.size());
  for (size_t i = 0; i < widx_.size(); ++i)
    out.parts[i] = {sup_[widx_[i]], colors_[i]};
}

bool CompositionStream::next(ColoredComposition& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!reach_[n_]) {
      done_ = true;
      return false;
    }
    rem_ = n_;
    descend();
    colors_.assign(widx_.size(), 0);
    emit(out);
    return true;
  }
  for (long i = static_cast<long>(colors_.size()) - 1; i >= 0; --i) {
    if (++colors_[i] < mult_[widx_[i]]) {
      emit(out);
      return true;
    }
    colors_[i] = 0;
  }
  if (!advance_weights()) {
    done_ = true;
    return false;
  }
  colors_.assign(widx_.size(), 0);
  emit(out);
  return true;
}

mpz_class count_by_enumeration(const MultisetSpec& spec, long n, long oracle_bound) {
  if (n > oracle_bound)
    throw SpecError("n=" + std::to_string(n) + " exceeds the enumeration oracle bound " +
                    std::to_string(oracle_bound));
  CompositionStream stream(spec, n);
  ColoredComposition c;
  mpz_class count = 0;
  while (stream.next(c)) ++count;
  return count;
}

VarietyDescriptor to_variety(const MultisetSpec& spec, const ColoredComposition& c) {
  VarietyDescriptor d;
  d.atoms.reserve(c.parts.size());
  for (const auto& part : c.parts) {
    auto atoms = atoms_at(spec, part.weight);
    if (part.color < 0 || part.color >= static_cast<long>(atoms.size()))
      throw SpecError("color " + std::to_string(part.color) + " invalid at weight " +
                      std::to_string(part.weight));
    d.atoms.push_back(atoms[part.color]);
  }
  return d;
}

}  // namespace minvar

#include "lensalex/oracle.hpp"

#include <stdexcept>

namespace lensalex {

FreeWord::FreeWord(const std::vector<FreeLetter>& letters) {
  for (const auto& l : letters) {
    if (l.generator < 1 || (l.sign != 1 && l.sign != -1))
      throw std::invalid_argument("bad free-group letter");
    if (!letters_.empty() && letters_.back().generator == l.generator &&
        letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::inverse() const {
  std::vector<FreeLetter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    inv.push_back({it->generator, -it->sign});
  return FreeWord(inv);
}

FreeWord FreeWord::operator*(const FreeWord& other) const {
  std::vector<FreeLetter> joined = letters_;
  joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
  return FreeWord(joined);
}

std::vector<FreeWord> artin_action(const PlainBraidWord& w) {
  const int m = w.strands();
  std::vector<FreeWord> img;
  for (int j = 1; j <= m; ++j) img.push_back(FreeWord::generator(j));
  for (const auto& l : w.letters()) {
    const auto i = static_cast<std::size_t>(l.index - 1);
    FreeWord xi = img[i];
    FreeWord xj = img[i + 1];
    if (l.exponent > 0) {
      img[i] = xi * xj * xi.inverse();
      img[i + 1] = xi;
    } else {
      img[i] = xj;
      img[i + 1] = xj.inverse() * xi * xj;
    }
  }
  return img;
}

GroupPresentation closure_presentation(const PlainBraidWord& w) {
  GroupPresentation pres;
  pres.generators = w.strands();
  const auto images = artin_action(w);
  for (int j = 1; j <= pres.generators; ++j)
    pres.relators.push_back(images[static_cast<std::size_t>(j - 1)] *
                            FreeWord::generator(j, -1));
  pres.component_of = component_partition(w).component_of;
  return pres;
}

GroupRingElement fox_derivative(const FreeWord& u, int j) {
  GroupRingElement out;
  auto add = [&out](const FreeWord& word, long c) {
    auto [it, inserted] = out.try_emplace(word, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  std::vector<FreeLetter> prefix;
  for (const auto& l : u.letters()) {
    if (l.generator == j) {
      if (l.sign > 0) {
        add(FreeWord(prefix), 1);
      } else {
        auto with_inverse = prefix;
        with_inverse.push_back(l);
        add(FreeWord(with_inverse), -1);
      }
    }
    prefix.push_back(l);
  }
  return out;
}

LaurentPoly abelianize(const GroupRingElement& elem,
                       const std::vector<VarId>& variable_of_generator) {
  LaurentPoly out;
  for (const auto& [word, c] : elem) {
    Monomial m;
    for (const auto& l : word.letters())
      m = m * Monomial::variable(variable_of_generator.at(static_cast<std::size_t>(l.generator - 1)),
                                 l.sign);
    out.add_term(m, c);
  }
  return out;
}

namespace {

std::vector<VarId> eta_variables(const GroupPresentation& pres, const MixedColors& vars) {
  std::vector<VarId> out;
  const int fixed_component = pres.component_of.at(0);
  for (int c : pres.component_of) out.push_back(c == fixed_component ? vars.fixed : vars.moving);
  return out;
}

}  // namespace

LaurentPoly eta_abelianize(const GroupRingElement& elem, const GroupPresentation& pres,
                           const MixedColors& vars) {
  return abelianize(elem, eta_variables(pres, vars));
}

RingMatrix alexander_fox_matrix(const GroupPresentation& pres,
                                const std::vector<VarId>& variable_of_generator) {
  const auto m = static_cast<std::size_t>(pres.generators);
  if (pres.relators.size() != m)
    throw std::invalid_argument("Fox matrix needs as many relators as generators");
  RingMatrix a(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a(i, j) = abelianize(fox_derivative(pres.relators[i], static_cast<int>(j + 1)),
                           variable_of_generator);
  return a;
}

LaurentPoly first_elementary_gcd(const RingMatrix& fox) {
  const std::size_t m = fox.size();
  if (m <= 1) return LaurentPoly(1);  // the empty minor
  std::vector<LaurentPoly> minors;
  std::vector<std::size_t> rows, cols;
  for (std::size_t skip_row = 0; skip_row < m; ++skip_row)
    for (std::size_t skip_col = 0; skip_col < m; ++skip_col) {
      rows.clear();
      cols.clear();
      for (std::size_t k = 0; k < m; ++k) {
        if (k != skip_row) rows.push_back(k);
        if (k != skip_col) cols.push_back(k);
      }
      minors.push_back(det(fox.submatrix(rows, cols)));
    }
  return gcd(minors);
}

VariableContext oracle_context() { return VariableContext{"s", "t"}; }

LaurentPoly oracle_two_variable(const MixedBraidWord& w, const MixedColors& vars) {
  const GroupPresentation pres = closure_presentation(embed_in_plain(w));
  return first_elementary_gcd(alexander_fox_matrix(pres, eta_variables(pres, vars)));
}

LaurentPoly fox_alexander(const PlainBraidWord& w, const std::vector<VarId>& variable_of_component) {
  const GroupPresentation pres = closure_presentation(w);
  std::vector<VarId> vars;
  for (int c : pres.component_of) vars.push_back(variable_of_component.at(static_cast<std::size_t>(c)));
  return first_elementary_gcd(alexander_fox_matrix(pres, vars));
}

}  // namespace lensalex

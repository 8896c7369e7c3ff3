#include "taylorhess/detcalc/expand.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace taylorhess {

Polynomial<RationalField> expand_determinant(const SymbolicMatrix& p, std::span<const Exponent> vars) {
  if (!p.is_square()) throw UsageError("expand_determinant: matrix is not square");
  if (p.rows() > 8) throw UsageError("expand_determinant: limited to 8 x 8");
  const RationalField field;
  const int nv = static_cast<int>(vars.size());
  std::map<Exponent, int> index;
  for (int i = 0; i < nv; ++i) index.emplace(vars[i], i);

  Polynomial<RationalField> det(field, nv);
  std::vector<std::size_t> perm(p.rows());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> parts(nv, 0);
    bool zero = false;
    for (std::size_t r = 0; r < perm.size() && !zero; ++r) {
      const Entry& e = p(r, perm[r]);
      if (!e) {
        zero = true;
        break;
      }
      auto it = index.find(*e);
      if (it == index.end()) throw UsageError("expand_determinant: c" + e->to_string() + " not listed");
      ++parts[it->second];
    }
    if (zero) continue;
    // Sign from the inversion count.
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    det.add_term(Exponent(std::move(parts)), field.from_int(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace taylorhess

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superw/sergeev.hpp"

namespace superw {

/// T_{ij}^{(level)} of Y(Q(1)), i, j ∈ {+1, −1}.
struct YGenerator {
  int i = 1;
  int j = 1;
  int level = 0;

  int parity() const { return (i < 0) != (j < 0) ? 1 : 0; }
  std::string str() const;
  friend auto operator<=>(const YGenerator&, const YGenerator&) = default;
};

/// Ordered product of at most two canonical generators (empty means 1).
using YMonomial = std::vector<YGenerator>;
using YExpression = std::map<YMonomial, Rational>;

std::string render(const YExpression& e);

/// Rewrites a generator over the canonical index pairs (1,1), (−1,1); level 0 gives
/// the scalar δ_ij (second component empty).
std::pair<Rational, std::optional<YGenerator>> canonicalize(const YGenerator& g);

/// Sign positions of the quadratic relation, numbered for mutation testing:
/// 0 super-sign, 1 minus between the two brackets, 2–5 the four products of the
/// first group, 6 the parity factor of the second group, 7–10 its four products,
/// 11 the symmetry T_{−i,−j}^{(m)} = (−1)^m T_{ij}^{(m)}.
inline constexpr int kSignSlots = 12;

struct YRelationInstance {
  int i = 1, j = 1, k = 1, l = 1;
  int m = 1, r = 1;
  YExpression lhs;
  YExpression rhs;

  std::string label() const;
};

/// Instantiates the relation for the given indices and levels; `flip` negates one sign slot.
YRelationInstance instantiate(int i, int j, int k, int l, int m, int r, int flip = -1);

struct RelationList {
  std::size_t raw_count = 0;
  std::vector<YRelationInstance> instances;
};

/// All index tuples in {±1}^4 and 1 ≤ m, r ≤ max_level, deduplicated by canonical form.
RelationList enumerate_relations(int max_level, int flip = -1);

/// Evaluates relations under T_{11}^{(k)} ↦ (−1)^k π(e_{n1}^{(n+k−1)}),
/// T_{−1,1}^{(k)} ↦ (−1)^k π(f_{n1}^{(n+k−1)}).
class YangianMap {
 public:
  explicit YangianMap(SergeevCache& s) : s_(s) {}

  Element image(const YGenerator& g);
  Element evaluate(const YExpression& e);

  struct Result {
    bool pass;
    Element lhs;
    Element rhs;
  };
  Result check(const YRelationInstance& inst);

 private:
  const Element& canonical_image(const YGenerator& g);
  SergeevCache& s_;
  std::map<YGenerator, Element> images_;
  std::map<std::pair<YGenerator, YGenerator>, Element> products_;
};

}  // namespace superw

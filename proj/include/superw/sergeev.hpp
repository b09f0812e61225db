#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "superw/whittaker.hpp"

namespace superw {

enum class SergeevKind { Even, Odd };

/// Memoized Sergeev elements e_{ij}^{(m)}, f_{ij}^{(m)} of U(q(n)).
///
/// Raw elements live in the Whittaker context of U(q(n)); reduced forms are
/// computed independently through the recursion π(g·y) = π(g·π(y)) so that
/// high levels never materialize in U(g).
class SergeevCache {
 public:
  explicit SergeevCache(WhittakerPtr w);

  WhittakerData& whittaker() const { return *w_; }
  const WhittakerPtr& whittaker_ptr() const { return w_; }
  int n() const { return n_; }

  /// e_{ij}^{(m)} (Even) or f_{ij}^{(m)} (Odd) in U(q(n)).
  const Element& raw(SergeevKind kind, int i, int j, int m);
  /// π of the same element, never expanded in U(g).
  const Element& reduced(SergeevKind kind, int i, int j, int m);

  /// F_{ij}^{(m)} over signed indices ±1..±n, expanded from the signed-index sum.
  Element signed_F(int i, int j, int m);
  /// Σ_i e_{ii}^{(2m+1)}.
  Element central_element(int m);
  Element reduced_central(int m);

  std::size_t cached_elements() const { return raw_.size() + reduced_.size(); }
  void clear();

 private:
  using Key = std::tuple<int, int, int, int>;
  void check_indices(int i, int j, int m) const;

  WhittakerPtr w_;
  int n_;
  std::map<Key, Element> raw_;
  std::map<Key, Element> reduced_;
  std::map<Key, Element> signed_;
};

/// The generator F_{ab} = E_{ab} + E_{-a,-b} of q(n) for nonzero a, b.
GeneratorId signed_generator(int a, int b);

/// Φ_0 = π(f_{n1}^{(n)}), Φ_k = (½ ad π(e_{n1}^{(n+1)}))^k Φ_0 for k < count.
std::vector<Element> phi_generators(SergeevCache& s, int count);

struct GeneratorFamilies {
  /// π(e_{n1}^{(m)}), π(f_{n1}^{(m)}) for m = n..2n−1.
  std::vector<WElement> family_a;
  /// π(z), odd_z_i = π(e_{n1}^{(n+i)}) for odd i ≤ n−1, and Φ_0..Φ_{n−1}.
  std::vector<WElement> family_b;
  /// central_z_i = [Φ_0, Φ_i] for even i ≤ n−1.
  std::vector<WElement> central_z;
};

/// Builds and certifies the generator families; throws if any member fails is_whittaker.
GeneratorFamilies w_generator_families(SergeevCache& s);

}  // namespace superw

#include "posetdim/crown.hpp"

namespace posetdim {

Poset crown_poset(int n) {
  if (n < 1) raise(errc::invalid_size, "crown size must be at least 1");
  if (n == 1)
    return build_poset({"x", "a", "b", "z"},
                       {{"x", "a"}, {"x", "b"}, {"a", "z"}, {"b", "z"}});
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("z" + std::to_string(i));
  std::vector<std::pair<ElementId, ElementId>> rel;
  for (int i = 0; i < n; ++i) {
    rel.emplace_back(i, n + i);            // x_i < z_i
    rel.emplace_back((i + 1) % n, n + i);  // x_{i+1} < z_i
  }
  return build_poset_ids(std::move(labels), rel);
}

std::pair<int, int> cover_endpoints(int n, int p) {
  if (n < 2) raise(errc::out_of_range, "cover numbering is defined for n >= 2");
  if (p < 1 || p > 2 * n)
    raise(errc::out_of_range, "cover number must lie in 1..2n");
  return {(p / 2) % n + 1, (p + 1) / 2};
}

Realizer crown_realizer(int n) {
  if (n < 1) raise(errc::invalid_size, "crown size must be at least 1");
  if (n == 1) {
    Word xabz{0, 1, 2, 3}, xbaz{0, 2, 1, 3};
    return {xabz, xbaz, xabz};
  }
  auto x = [n](int i) { return (i - 1 + n) % n; };
  auto z = [n](int i) { return n + (i - 1 + n) % n; };
  Word w1{x(1), x(2), z(1)};
  for (int i = 2; i <= n - 1; ++i) {
    w1.push_back(x(i + 1));
    w1.push_back(z(i));
  }
  w1.push_back(z(n));
  Word w2{x(2)};
  for (int i = 2; i <= n - 1; ++i) {
    w2.push_back(x(i + 1));
    w2.push_back(z(i));
  }
  w2.push_back(x(1));
  w2.push_back(z(n));
  w2.push_back(z(1));
  Word w3{x(1)};
  for (int i = n; i >= 2; --i) {
    w3.push_back(x(i));
    w3.push_back(z(i));
  }
  w3.push_back(z(1));
  return {w1, w2, w3};
}

}  // namespace posetdim

#include "sgt/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sgt {

Perm::Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::iota(img_.begin(), img_.end(), 1);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty()) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v) - 1])
      throw std::invalid_argument("image table is not a permutation of 1..degree");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)]) - 1] = i + 1;
  return Perm(std::move(inv));
}

std::uint64_t Perm::order() const {
  std::vector<bool> done(img_.size(), false);
  std::uint64_t ord = 1;
  for (int i = 1; i <= degree(); ++i) {
    if (done[static_cast<std::size_t>(i) - 1]) continue;
    std::uint64_t len = 0;
    int x = i;
    do {
      done[static_cast<std::size_t>(x) - 1] = true;
      x = (*this)(x);
      ++len;
    } while (x != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

int Perm::smallest_moved_point() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return i;
  return 0;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw degree_mismatch("compose: degree mismatch (" + std::to_string(a.degree()) +
                          " vs " + std::to_string(b.degree()) + ")");
  std::vector<int> img(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x) img[static_cast<std::size_t>(x) - 1] = a(b(x));
  return Perm(std::move(img));
}

Perm conjugate(const Perm& a, const Perm& x) {
  return compose(compose(x.inverse(), a), x);
}

Perm commutator(const Perm& a, const Perm& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

Perm parse_perm(std::string_view text, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw parse_error("empty permutation (identity is spelled \"()\")", i);

  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '('", i);
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw parse_error("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected point or ')'", i);
      std::size_t start = i;
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw parse_error("point exceeds degree " + std::to_string(degree), start);
        ++i;
      }
      if (v < 1) throw parse_error("points are 1-based", start);
      if (used[static_cast<std::size_t>(v) - 1])
        throw parse_error("point " + std::to_string(v) + " appears twice (cycles must be disjoint)", start);
      used[static_cast<std::size_t>(v) - 1] = true;
      cycle.push_back(static_cast<int>(v));
    }
    if (cycle.size() == 1) throw parse_error("singleton cycle (fixed points are implicit)", i);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[static_cast<std::size_t>(cycle[k]) - 1] = cycle[(k + 1) % cycle.size()];
    any_cycle = true;
    skip_ws();
  }
  if (!any_cycle) throw parse_error("no cycles found", 0);
  return Perm(std::move(img));
}

std::string to_cycle_string(const Perm& p) {
  std::ostringstream out;
  std::vector<bool> done(static_cast<std::size_t>(p.degree()), false);
  bool any = false;
  for (int i = 1; i <= p.degree(); ++i) {
    if (done[static_cast<std::size_t>(i) - 1] || p(i) == i) continue;
    any = true;
    out << '(';
    int x = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      done[static_cast<std::size_t>(x) - 1] = true;
      x = p(x);
      first = false;
    } while (x != i);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::uint64_t perm_hash(const Perm& p) {
  // FNV-1a over the image table; stable across platforms.
  std::uint64_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace sgt

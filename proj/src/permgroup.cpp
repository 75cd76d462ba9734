#include "permsing/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "permsing/error.hpp"

namespace permsing {

namespace {

// Closures beyond this many elements are rejected rather than left to run.
constexpr std::size_t kMaxGroupOrder = 1'000'000;

void require_degree(int n) {
  if (n < 1) throw InvalidInput("degree must be positive, got " + std::to_string(n));
}

}  // namespace

Permutation::Permutation(int n) {
  require_degree(n);
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  require_degree(n);
  std::vector<int> zero_based;
  std::vector<bool> seen(images.size(), false);
  zero_based.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > n) throw InvalidInput("image " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (seen[v - 1]) throw InvalidInput("image " + std::to_string(v) + " repeated");
    seen[v - 1] = true;
    zero_based.push_back(v - 1);
  }
  return Permutation(std::move(zero_based));
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_);
  for (int& v : out) ++v;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i])) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_type().size()); }

bool Permutation::is_transposition() const {
  auto type = cycle_type();
  return type[0] == 2 && (type.size() == 1 || type[1] == 1);
}

int Permutation::sign() const {
  // Each cycle of length L contributes (-1)^(L-1).
  return (degree() - cycle_count()) % 2 == 0 ? 1 : -1;
}

int Permutation::order() const {
  int result = 1;
  for (int len : cycle_type()) result = std::lcm(result, len);
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("composing permutations of different degrees");
  std::vector<int> out(a.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return Permutation(std::move(out));
}

Permutation Permutation::conjugated_by(const Permutation& sigma) const {
  return sigma * *this * sigma.inverse();
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out += '(';
    bool first = true;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i])) {
      seen[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
    }
    out += ')';
  }
  return out;
}

Permutation parse_permutation(std::string_view text, int n) {
  require_degree(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto fail = [&](const std::string& why) -> InvalidInput {
    return InvalidInput("malformed cycle string '" + std::string(text) + "': " + why);
  };
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      if (pos >= text.size()) throw fail("unclosed '('");
      if (text[pos] == ')') break;
      if (!cycle.empty()) {
        if (!is_sep(text[pos])) throw fail("expected separator");
        while (pos < text.size() && is_sep(text[pos])) ++pos;
        if (pos >= text.size()) throw fail("unclosed '('");
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("expected integer");
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > n) throw fail("entry out of range 1.." + std::to_string(n));
        ++pos;
      }
      if (value < 1) throw fail("entry out of range 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(value - 1)]) throw fail("entry " + std::to_string(value) + " repeated");
      used[static_cast<std::size_t>(value - 1)] = true;
      cycle.push_back(static_cast<int>(value - 1));
    }
    if (cycle.empty()) throw fail("empty cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  for (int& v : images) ++v;
  return Permutation::from_images(images);
}

std::vector<Permutation> parse_generators(std::string_view text, int n) {
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (true) {
    auto semi = text.find(';', start);
    auto piece = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    gens.push_back(parse_permutation(piece, n));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return gens;
}

bool PermutationGroup::contains(const Permutation& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

PermutationGroup PermutationGroup::conjugated_by(const Permutation& sigma) const {
  std::vector<Permutation> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(g.conjugated_by(sigma));
  return group_closure(gens, n_);
}

PermutationGroup group_closure(std::span<const Permutation> generators, int n) {
  require_degree(n);
  for (const auto& g : generators)
    if (g.degree() != n)
      throw InvalidInput("generator of degree " + std::to_string(g.degree()) + " in group of degree " +
                         std::to_string(n));

  std::set<Permutation> seen{Permutation(n)};
  std::deque<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > kMaxGroupOrder) throw InvalidInput("group order exceeds supported size");
        frontier.push_back(std::move(y));
      }
    }
  }
  return PermutationGroup(n, std::vector<Permutation>(seen.begin(), seen.end()),
                          std::vector<Permutation>(generators.begin(), generators.end()));
}

PermutationGroup named_group(std::string_view name, int n) {
  require_degree(n);
  auto cycle_up_to = [n](int k) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    for (int i = 0; i < k; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % k + 1;
    return Permutation::from_images(images);
  };
  std::vector<Permutation> gens;
  if (name == "trivial") {
  } else if (name == "Sn") {
    if (n >= 2) {
      gens.push_back(cycle_up_to(2));
      gens.push_back(cycle_up_to(n));
    }
  } else if (name == "An") {
    for (int k = 3; k <= n; ++k) {
      std::vector<int> images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 1);
      images[0] = 2;
      images[1] = k;
      images[static_cast<std::size_t>(k - 1)] = 1;
      gens.push_back(Permutation::from_images(images));
    }
  } else if (name == "klein4") {
    if (n < 4) throw InvalidInput("klein4 needs degree at least 4");
    gens.push_back(parse_permutation("(1 2)(3 4)", n));
    gens.push_back(parse_permutation("(1 3)(2 4)", n));
  } else if (name.starts_with("cyclic:")) {
    auto arg = name.substr(7);
    int k = 0;
    for (char c : arg) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || k > n) throw InvalidInput("bad cyclic order in '" + std::string(name) + "'");
      k = k * 10 + (c - '0');
    }
    if (arg.empty() || k < 1 || k > n)
      throw InvalidInput("cyclic:k needs 1 <= k <= n, got '" + std::string(name) + "'");
    if (k > 1) gens.push_back(cycle_up_to(k));
  } else {
    throw InvalidInput("unknown group name '" + std::string(name) + "'");
  }
  return group_closure(gens, n);
}

int fixed_space_dimension(const Permutation& g) { return g.cycle_count(); }

bool is_pseudo_reflection(const Permutation& g) {
  if (g.is_identity()) throw InvalidInput("the identity is not a candidate pseudo-reflection");
  return fixed_space_dimension(g) == g.degree() - 1;
}

std::vector<Permutation> transpositions(const PermutationGroup& group) {
  std::vector<Permutation> out;
  for (const auto& g : group.elements())
    if (!g.is_identity() && g.is_transposition()) out.push_back(g);
  return out;
}

int branch_components(const PermutationGroup& group) {
  auto trans = transpositions(group);
  std::set<Permutation> unvisited(trans.begin(), trans.end());
  int orbits = 0;
  while (!unvisited.empty()) {
    Permutation t = *unvisited.begin();
    ++orbits;
    for (const auto& g : group.elements()) unvisited.erase(t.conjugated_by(g));
  }
  return orbits;
}

bool is_even_group(const PermutationGroup& group) {
  return std::all_of(group.generators().begin(), group.generators().end(),
                     [](const Permutation& g) { return g.sign() == 1; });
}

GorensteinReport gorenstein_report(const PermutationGroup& group, Characteristic p) {
  GorensteinReport report;
  // In characteristic 2 the sign of the top form is invisible; otherwise the
  // form is invariant exactly when G is even.
  report.kx_index_divides = (p.value() == 2 || is_even_group(group)) ? 1 : 2;
  report.branch_component_count = branch_components(group);
  if (report.branch_component_count > 0) {
    report.boundary_coefficient = p.value() == 2 ? GorensteinReport::Coefficient{1, 1} : GorensteinReport::Coefficient{1, 2};
    report.b_cartier_index_divides = report.boundary_coefficient->den;
  }
  return report;
}

}  // namespace permsing

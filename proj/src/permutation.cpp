#include "galois/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "galois/error.hpp"

namespace galois {

Permutation::Permutation(std::vector<std::uint8_t> image) : img_(std::move(image)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw Error(ErrorCode::InvalidInput, "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != k) return false;
  return true;
}

bool Permutation::is_even() const {
  std::vector<bool> seen(img_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t k = s; !seen[k]; k = img_[k]) {
      seen[k] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  std::size_t result = 1;
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t k = s; !seen[k]; k = img_[k]) {
      seen[k] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) inv[img_[k]] = static_cast<std::uint8_t>(k);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidInput, "composing permutations of different degree");
  std::vector<std::uint8_t> img(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) img[k] = a.img_[b.img_[k]];
  Permutation r;
  r.img_ = std::move(img);
  return r;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s] || img_[s] == s) continue;
    out += '(';
    for (std::size_t k = s; !seen[k]; k = img_[k]) {
      seen[k] = true;
      if (k != s) out += ' ';
      out += std::to_string(k + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::parse_cycles(const std::string& text, std::size_t n) {
  Permutation result = identity(n);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  if (i == text.size()) throw Error(ErrorCode::InvalidInput, "empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorCode::InvalidInput, "expected '(' in \"" + text + "\"");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(ErrorCode::InvalidInput, "bad cycle in \"" + text + "\"");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > n) throw Error(ErrorCode::InvalidInput, "point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (std::find(cycle.begin(), cycle.end(), v - 1) != cycle.end())
        throw Error(ErrorCode::InvalidInput, "repeated point in cycle \"" + text + "\"");
      cycle.push_back(v - 1);
    }
    if (cycle.size() > 1) {
      std::vector<std::uint8_t> img(n);
      std::iota(img.begin(), img.end(), 0);
      for (std::size_t k = 0; k < cycle.size(); ++k)
        img[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
      // Cycles written left to right compose right to left.
      result = result * Permutation(std::move(img));
    }
    skip_space();
  }
  return result;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::size_t lex_rank(const Permutation& p) {
  const std::size_t n = p.size();
  std::size_t rank = 0;
  std::vector<bool> used(n, false);
  std::size_t fact = 1;
  for (std::size_t k = 2; k < n; ++k) fact *= k;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t v = 0; v < p(i); ++v)
      if (!used[v]) ++smaller;
    used[p(i)] = true;
    rank += smaller * fact;
    if (n - 1 - i > 0) fact /= (n - 1 - i);
  }
  return rank;
}

std::vector<Permutation> generated_group(const std::vector<Permutation>& gens, std::size_t n) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> queue{Permutation::identity(n)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& g : gens) {
      Permutation y = queue[q] * g;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

bool is_closed_group(const std::vector<Permutation>& elements) {
  if (elements.empty()) return false;
  std::set<Permutation> s(elements.begin(), elements.end());
  if (!s.count(Permutation::identity(elements.front().size()))) return false;
  for (const auto& a : s)
    for (const auto& b : s)
      if (!s.count(a * b)) return false;
  return true;
}

std::vector<std::vector<Permutation>> all_subgroups(const std::vector<Permutation>& group) {
  if (group.empty()) return {};
  const std::size_t n = group.front().size();
  std::vector<Permutation> elems(group);
  std::sort(elems.begin(), elems.end());
  const std::size_t m = elems.size();
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(elems[i], i);
  std::vector<std::vector<std::size_t>> mul(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto it = index.find(elems[i] * elems[j]);
      if (it == index.end()) throw Error(ErrorCode::InvalidSubgroup, "element list is not closed");
      mul[i][j] = it->second;
    }
  const std::size_t e = index.at(Permutation::identity(n));

  // Every subgroup arises from a smaller one by adjoining one element.
  using Members = std::vector<bool>;
  struct Sub {
    Members members;
    std::vector<std::size_t> gens;
  };
  std::set<Members> known;
  std::vector<Sub> subs;
  Members trivial(m, false);
  trivial[e] = true;
  known.insert(trivial);
  subs.push_back({trivial, {}});
  for (std::size_t s = 0; s < subs.size(); ++s) {
    for (std::size_t g = 0; g < m; ++g) {
      if (subs[s].members[g]) continue;
      std::vector<std::size_t> gens = subs[s].gens;
      gens.push_back(g);
      Members mem(m, false);
      mem[e] = true;
      std::vector<std::size_t> queue{e};
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (auto h : gens) {
          const std::size_t y = mul[queue[q]][h];
          if (!mem[y]) {
            mem[y] = true;
            queue.push_back(y);
          }
        }
      if (known.insert(mem).second) subs.push_back({std::move(mem), std::move(gens)});
    }
  }

  std::vector<std::vector<Permutation>> out;
  out.reserve(subs.size());
  for (const auto& s : subs) {
    std::vector<Permutation> h;
    for (std::size_t i = 0; i < m; ++i)
      if (s.members[i]) h.push_back(elems[i]);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<std::size_t>> orbits(const std::vector<Permutation>& group, std::size_t n) {
  std::vector<int> owner(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (owner[s] >= 0) continue;
    std::vector<std::size_t> orbit{s};
    owner[s] = static_cast<int>(out.size());
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (const auto& g : group) {
        const std::size_t y = g(orbit[q]);
        if (owner[y] < 0) {
          owner[y] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace galois

#include "kzindex/coset.hpp"

#include <deque>
#include <queue>

#include "kzindex/errors.hpp"

namespace kz {

namespace {

constexpr int inv(int x) { return x ^ 1; }

const std::vector<GenWord>& relators() {
  static const std::vector<GenWord> rels{{kA, kA, kA, kA}, {kA, kA, kBInv, kBInv, kBInv}};
  return rels;
}

class Enumerator {
 public:
  explicit Enumerator(std::size_t cap) : cap_(cap) { new_coset(); }

  void run(const std::vector<GenWord>& subgroup) {
    for (const auto& w : subgroup) scan_and_fill(0, w);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      for (const auto& r : relators()) {
        scan_and_fill(static_cast<int>(c), r);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      for (int x = 0; x < 4; ++x) {
        if (table_[c][static_cast<std::size_t>(x)] < 0) define(static_cast<int>(c), x);
      }
    }
  }

  CosetTable result() {
    std::vector<int> renum(table_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (alive(c)) renum[c] = next++;
    }
    CosetTable t;
    t.defined = table_.size();
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      std::array<int, 4> row{};
      for (int x = 0; x < 4; ++x) {
        const int d = table_[c][static_cast<std::size_t>(x)];
        if (d < 0) throw IndexExceedsCap("coset enumeration ended with an incomplete table");
        row[static_cast<std::size_t>(x)] = renum[static_cast<std::size_t>(rep(d))];
      }
      t.action.push_back(row);
    }
    return t;
  }

 private:
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int new_coset() {
    if (live_ >= cap_) {
      throw IndexExceedsCap("coset enumeration exceeded " + std::to_string(cap_) + " live cosets");
    }
    if (table_.size() >= 64 * cap_ + 1024) {
      throw IndexExceedsCap("coset enumeration defined too many cosets");
    }
    table_.push_back({-1, -1, -1, -1});
    parent_.push_back(static_cast<int>(table_.size()) - 1);
    ++live_;
    return static_cast<int>(table_.size()) - 1;
  }

  int& entry(int c, int x) { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]; }

  void define(int c, int x) {
    const int n = new_coset();
    entry(c, x) = n;
    entry(n, inv(x)) = c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int nx = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = nx;
    }
    return r;
  }

  void merge(int k, int l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    --live_;
    queue_.push_back(l);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      const int g = queue_.front();
      queue_.pop_front();
      for (int x = 0; x < 4; ++x) {
        const int d = entry(g, x);
        if (d < 0) continue;
        entry(d, inv(x)) = -1;
        const int mu = rep(g);
        const int nu = rep(d);
        if (entry(mu, x) >= 0) {
          merge(nu, entry(mu, x));
        } else if (entry(nu, inv(x)) >= 0) {
          merge(mu, entry(nu, inv(x)));
        } else {
          entry(mu, x) = nu;
          entry(nu, inv(x)) = mu;
        }
      }
    }
  }

  void scan_and_fill(int c, const GenWord& w) {
    if (w.empty()) return;
    int f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) {
        f = entry(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      // b == c until the backward scan has moved.
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inv(w[static_cast<std::size_t>(j)])) >= 0) {
        b = entry(b, inv(w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, w[static_cast<std::size_t>(i)]) = b;
        entry(b, inv(w[static_cast<std::size_t>(i)])) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  std::size_t cap_;
  std::size_t live_ = 0;
  std::vector<std::array<int, 4>> table_;
  std::vector<int> parent_;
  std::deque<int> queue_;
};

}  // namespace

GenWord to_presentation(const Word& w) {
  GenWord out;
  for (Letter l : w) {
    switch (l) {
      case Letter::S: out.push_back(kA); break;
      case Letter::SInv: out.push_back(kAInv); break;
      case Letter::T: out.insert(out.end(), {kAInv, kB}); break;
      case Letter::TInv: out.insert(out.end(), {kBInv, kA}); break;
    }
  }
  GenWord reduced;
  for (int x : out) {
    if (!reduced.empty() && reduced.back() == inv(x)) reduced.pop_back();
    else reduced.push_back(x);
  }
  return reduced;
}

int CosetTable::apply(int coset, const GenWord& w) const {
  for (int x : w) coset = action[static_cast<std::size_t>(coset)][static_cast<std::size_t>(x)];
  return coset;
}

CosetTable enumerate_cosets(const std::vector<Mat2>& gens, std::size_t cap) {
  std::vector<GenWord> words;
  for (const auto& m : gens) words.push_back(to_presentation(matrix_to_word(m)));
  Enumerator e(cap);
  e.run(words);
  return e.result();
}

std::size_t index_in_sl2(const std::vector<Mat2>& gens, std::size_t cap) {
  return enumerate_cosets(gens, cap).index();
}

bool contains_minus_identity(const std::vector<Mat2>& gens, std::size_t cap) {
  return enumerate_cosets(gens, cap).apply(0, {kA, kA}) == 0;
}

bool table_is_consistent(const CosetTable& t, const std::vector<Mat2>& gens) {
  const std::size_t n = t.index();
  if (n == 0) return false;
  for (std::size_t c = 0; c < n; ++c) {
    for (int x = 0; x < 4; ++x) {
      const int d = t.action[c][static_cast<std::size_t>(x)];
      if (d < 0 || static_cast<std::size_t>(d) >= n) return false;
      if (t.action[static_cast<std::size_t>(d)][static_cast<std::size_t>(inv(x))] != static_cast<int>(c)) return false;
    }
    for (const auto& r : relators()) {
      if (t.apply(static_cast<int>(c), r) != static_cast<int>(c)) return false;
    }
  }
  for (const auto& m : gens) {
    if (t.apply(0, to_presentation(matrix_to_word(m))) != 0) return false;
  }
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    const int c = q.front();
    q.pop();
    for (int x = 0; x < 4; ++x) {
      const int d = t.action[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
      if (!seen[static_cast<std::size_t>(d)]) {
        seen[static_cast<std::size_t>(d)] = 1;
        ++count;
        q.push(d);
      }
    }
  }
  return count == n;
}

}  // namespace kz

#include "splitjac/perm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace splitjac {

Perm::Perm(int n) : n_(n) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("permutation degree out of range");
  for (int i = 0; i < n; ++i) img_[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
}

Perm Perm::from_images(const std::vector<int>& images) {
  Perm p(static_cast<int>(images.size()));
  std::array<bool, kMaxN> seen{};
  for (size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 0 || v >= p.n_ || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("images do not form a permutation");
    seen[static_cast<size_t>(v)] = true;
    p.img_[i] = static_cast<uint8_t>(v);
  }
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  Perm r(n_);
  for (int i = 0; i < n_; ++i)
    r.img_[static_cast<size_t>(i)] = img_[o.img_[static_cast<size_t>(i)]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(n_);
  for (int i = 0; i < n_; ++i) r.img_[img_[static_cast<size_t>(i)]] = static_cast<uint8_t>(i);
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
  Perm r(n_);
  for (int i = 0; i < n_; ++i)
    r.img_[g.img_[static_cast<size_t>(i)]] = g.img_[img_[static_cast<size_t>(i)]];
  return r;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[static_cast<size_t>(i)] != i) return false;
  return true;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> type;
  std::array<bool, kMaxN> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    do {
      seen[static_cast<size_t>(j)] = true;
      j = img_[static_cast<size_t>(j)];
      ++len;
    } while (j != i);
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

uint64_t Perm::type_signature() const {
  std::array<int, kMaxN + 1> count{};
  std::array<bool, kMaxN> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    do {
      seen[static_cast<size_t>(j)] = true;
      j = img_[static_cast<size_t>(j)];
      ++len;
    } while (j != i);
    ++count[static_cast<size_t>(len)];
  }
  uint64_t sig = 0;
  for (int len = 1; len <= kMaxN; ++len)
    sig |= static_cast<uint64_t>(count[static_cast<size_t>(len)]) << (4 * (len - 1));
  return sig;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> cyc;
  std::array<bool, kMaxN> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    std::vector<int> c;
    int j = i;
    do {
      seen[static_cast<size_t>(j)] = true;
      c.push_back(j);
      j = img_[static_cast<size_t>(j)];
    } while (j != i);
    cyc.push_back(std::move(c));
  }
  std::sort(cyc.begin(), cyc.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });
  return cyc;
}

bool Perm::operator<(const Perm& o) const {
  return std::lexicographical_compare(img_.begin(), img_.begin() + n_,
                                      o.img_.begin(), o.img_.begin() + o.n_);
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ")";
  }
  if (!any) return "()";
  return os.str();
}

uint64_t type_signature_of(int n, const std::vector<int>& type) {
  std::array<int, Perm::kMaxN + 1> count{};
  int total = 0;
  for (int len : type) {
    if (len < 1 || len > n) throw std::invalid_argument("bad cycle length");
    ++count[static_cast<size_t>(len)];
    total += len;
  }
  if (total != n) throw std::invalid_argument("cycle type is not a partition of n");
  uint64_t sig = 0;
  for (int len = 1; len <= Perm::kMaxN; ++len)
    sig |= static_cast<uint64_t>(count[static_cast<size_t>(len)]) << (4 * (len - 1));
  return sig;
}

Perm base_of_type(int n, std::vector<int> type) {
  type_signature_of(n, type);  // validates
  std::sort(type.begin(), type.end());
  std::vector<int> img(static_cast<size_t>(n));
  int start = 0;
  for (int len : type) {
    for (int j = 0; j < len; ++j)
      img[static_cast<size_t>(start + j)] = j + 1 < len ? start + j + 1 : start;
    start += len;
  }
  return Perm::from_images(img);
}

Perm conjugator(const Perm& p, const Perm& q) {
  auto cp = p.cycles();
  auto cq = q.cycles();
  if (cp.size() != cq.size()) throw std::invalid_argument("cycle types differ");
  std::vector<int> img(static_cast<size_t>(p.n()));
  for (size_t k = 0; k < cp.size(); ++k) {
    if (cp[k].size() != cq[k].size()) throw std::invalid_argument("cycle types differ");
    for (size_t j = 0; j < cp[k].size(); ++j)
      img[static_cast<size_t>(cp[k][j])] = cq[k][j];
  }
  return Perm::from_images(img);
}

namespace {

void gen_elements(int n, std::vector<int>& remaining_lengths, std::vector<bool>& used,
                  std::vector<int>& img, int assigned, std::vector<Perm>& out) {
  if (assigned == n) {
    out.push_back(Perm::from_images(img));
    return;
  }
  int s = 0;
  while (used[static_cast<size_t>(s)]) ++s;
  used[static_cast<size_t>(s)] = true;
  int prev = -1;
  for (size_t li = 0; li < remaining_lengths.size(); ++li) {
    int len = remaining_lengths[li];
    if (len == prev) continue;  // one attempt per distinct length
    prev = len;
    remaining_lengths.erase(remaining_lengths.begin() + static_cast<long>(li));
    // build the cycle (s, a_1, ..., a_{len-1}) over unused points
    std::vector<int> cyc{s};
    std::function<void()> place = [&]() {
      if (static_cast<int>(cyc.size()) == len) {
        for (size_t j = 0; j < cyc.size(); ++j)
          img[static_cast<size_t>(cyc[j])] =
              j + 1 < cyc.size() ? cyc[j + 1] : cyc[0];
        gen_elements(n, remaining_lengths, used, img, assigned + len, out);
        return;
      }
      for (int a = 0; a < n; ++a) {
        if (used[static_cast<size_t>(a)]) continue;
        used[static_cast<size_t>(a)] = true;
        cyc.push_back(a);
        place();
        cyc.pop_back();
        used[static_cast<size_t>(a)] = false;
      }
    };
    place();
    remaining_lengths.insert(remaining_lengths.begin() + static_cast<long>(li), len);
  }
  used[static_cast<size_t>(s)] = false;
}

}  // namespace

std::vector<Perm> elements_of_type(int n, const std::vector<int>& type) {
  type_signature_of(n, type);  // validates
  std::vector<int> lengths = type;
  std::sort(lengths.begin(), lengths.end());
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::vector<int> img(static_cast<size_t>(n), 0);
  std::vector<Perm> out;
  gen_elements(n, lengths, used, img, 0, out);
  return out;
}

std::vector<Perm> centralizer_elements(const Perm& p) {
  const int n = p.n();
  auto cyc = p.cycles();
  // group cycles by length; cycles() is already sorted by (length, start)
  std::vector<std::pair<int, std::vector<std::vector<int>>>> groups;
  for (auto& c : cyc) {
    if (groups.empty() || groups.back().first != static_cast<int>(c.size()))
      groups.push_back({static_cast<int>(c.size()), {}});
    groups.back().second.push_back(c);
  }
  std::vector<Perm> out;
  std::vector<int> img(static_cast<size_t>(n));
  // odometer over groups: per group a permutation of its cycles plus a
  // rotation offset for each cycle
  struct GroupState {
    std::vector<int> perm;     // cycle i of the group maps onto cycle perm[i]
    std::vector<int> offsets;  // rotation applied on arrival
  };
  std::vector<GroupState> state(groups.size());
  for (size_t g = 0; g < groups.size(); ++g) {
    state[g].perm.resize(groups[g].second.size());
    std::iota(state[g].perm.begin(), state[g].perm.end(), 0);
    state[g].offsets.assign(groups[g].second.size(), 0);
  }
  std::function<void(size_t)> emit = [&](size_t g) {
    if (g == groups.size()) {
      out.push_back(Perm::from_images(img));
      return;
    }
    const int len = groups[g].first;
    const auto& cycles_g = groups[g].second;
    GroupState& st = state[g];
    std::sort(st.perm.begin(), st.perm.end());
    do {
      std::fill(st.offsets.begin(), st.offsets.end(), 0);
      for (;;) {
        for (size_t i = 0; i < cycles_g.size(); ++i) {
          const auto& src = cycles_g[i];
          const auto& dst = cycles_g[static_cast<size_t>(st.perm[i])];
          for (int j = 0; j < len; ++j)
            img[static_cast<size_t>(src[static_cast<size_t>(j)])] =
                dst[static_cast<size_t>((j + st.offsets[i]) % len)];
        }
        emit(g + 1);
        // advance offsets odometer
        size_t k = 0;
        while (k < st.offsets.size()) {
          if (++st.offsets[k] < len) break;
          st.offsets[k] = 0;
          ++k;
        }
        if (k == st.offsets.size()) break;
      }
    } while (std::next_permutation(st.perm.begin(), st.perm.end()));
  };
  emit(0);
  return out;
}

namespace {

struct ChainLevel {
  int base = 0;
  std::vector<Perm> gens;
  std::map<int, Perm> transversal;  // point -> u with u(base) = point
};

// Incremental Schreier-Sims. Invariant: after every public call, each level's
// Schreier generators sift to the identity through the deeper levels, so the
// orbit sizes multiply to the group order.
class StabilizerChain {
 public:
  explicit StabilizerChain(int n) : n_(n) {
    // depth never exceeds n (bases are distinct points), so levels_ never
    // reallocates and references into it stay valid across append calls
    levels_.reserve(static_cast<size_t>(n) + 1);
  }

  void add_generator(const Perm& g) {
    if (!g.is_identity()) append(0, g);
  }

  uint64_t order() const {
    uint64_t o = 1;
    for (const auto& lvl : levels_) o *= static_cast<uint64_t>(lvl.transversal.size());
    return o;
  }

 private:
  void build_orbit(ChainLevel& lvl) const {
    lvl.transversal.clear();
    lvl.transversal.emplace(lvl.base, Perm(n_));
    std::vector<int> frontier{lvl.base};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int p : frontier) {
        const Perm up = lvl.transversal.at(p);
        for (const Perm& s : lvl.gens) {
          const int q = s[p];
          if (lvl.transversal.find(q) == lvl.transversal.end()) {
            lvl.transversal.emplace(q, s * up);
            next.push_back(q);
          }
        }
      }
      frontier = std::move(next);
    }
  }

  Perm sift(size_t from, Perm g) const {
    for (size_t i = from; i < levels_.size(); ++i) {
      if (g.is_identity()) break;
      const auto it = levels_[i].transversal.find(g[levels_[i].base]);
      if (it == levels_[i].transversal.end()) return g;
      g = it->second.inverse() * g;
    }
    return g;
  }

  void append(size_t i, const Perm& g) {
    if (i == levels_.size()) {
      ChainLevel lvl;
      lvl.base = 0;
      while (g[lvl.base] == lvl.base) ++lvl.base;
      levels_.push_back(std::move(lvl));
    }
    levels_[i].gens.push_back(g);
    build_orbit(levels_[i]);
    close(i);
  }

  // Verifies every Schreier generator of level i against the deeper chain;
  // failures are appended at level i+1, which recursively re-closes it. The
  // recursion only touches levels > i, so the iteration here is stable, and
  // it terminates because each failure strictly grows the deeper group.
  void close(size_t i) {
    for (const auto& [p, up] : levels_[i].transversal) {
      for (const Perm& s : levels_[i].gens) {
        const Perm w = levels_[i].transversal.at(s[p]).inverse() * (s * up);
        const Perm residue = sift(i + 1, w);
        if (!residue.is_identity()) append(i + 1, residue);
      }
    }
  }

  int n_;
  std::vector<ChainLevel> levels_;
};

}  // namespace

uint64_t group_order(const std::vector<Perm>& gens) {
  if (gens.empty()) return 1;
  StabilizerChain chain(gens.front().n());
  for (const Perm& g : gens) chain.add_generator(g);
  return chain.order();
}

}  // namespace splitjac

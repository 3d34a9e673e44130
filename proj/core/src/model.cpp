// model.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "submodal/model.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "submodal/compiled.hpp"
#include "submodal/render.hpp"

namespace submodal {

namespace {
std::size_t table_size(int n, int arity) {
  std::size_t s = 1;
  for (int i = 0; i < arity; ++i) {
    s *= static_cast<std::size_t>(n);
    if (s > (std::size_t{1} << 40))
      throw std::invalid_argument("table too large (n^arity overflow)");
  }
  return s;
}
}  // namespace

FiniteModel::FiniteModel(Signature sig, int size)
    : sig_(std::move(sig)), size_(size) {
  if (size_ < 1) throw std::invalid_argument("universe must be nonempty");
  if (size_ > 62) throw std::invalid_argument("universe too large (max 62)");
  for (const auto& [name, arity] : sig_.predicates()) {
    pred_names_.push_back(name);
    pred_arities_.push_back(arity);
    rel_.emplace_back(table_size(size_, arity), 0);
  }
  for (const auto& [name, arity] : sig_.functions()) {
    fun_names_.push_back(name);
    fun_arities_.push_back(arity);
    fun_.emplace_back(table_size(size_, arity), 0);
  }
  for (const auto& name : sig_.constants()) {
    const_names_.push_back(name);
    cst_.push_back(0);
  }
}

std::size_t FiniteModel::rank(const std::vector<int>& tuple) const {
  std::size_t r = 0;
  for (int t : tuple) {
    check_range(t);
    r = r * static_cast<std::size_t>(size_) + static_cast<std::size_t>(t);
  }
  return r;
}

std::vector<int> FiniteModel::unrank(std::size_t r, int arity) const {
  std::vector<int> tuple(arity);
  for (int i = arity - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(r % static_cast<std::size_t>(size_));
    r /= static_cast<std::size_t>(size_);
  }
  return tuple;
}

void FiniteModel::check_range(int e) const {
  if (e < 0 || e >= size_)
    throw std::out_of_range("element out of range: " + std::to_string(e));
}

namespace {
int index_of(const std::vector<std::string>& names, const std::string& name,
             const char* what) {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name)
    throw std::invalid_argument(std::string("unknown ") + what + ": " + name);
  return static_cast<int>(it - names.begin());
}
}  // namespace

int FiniteModel::pred_index(const std::string& name) const {
  return index_of(pred_names_, name, "predicate");
}
int FiniteModel::fun_index(const std::string& name) const {
  return index_of(fun_names_, name, "function");
}
int FiniteModel::const_index(const std::string& name) const {
  return index_of(const_names_, name, "constant");
}

bool FiniteModel::rel_contains(const std::string& pred,
                               const std::vector<int>& tuple) const {
  int i = pred_index(pred);
  if (tuple.size() != static_cast<std::size_t>(pred_arities_[i]))
    throw std::invalid_argument("tuple arity mismatch for " + pred);
  return rel_[i][rank(tuple)] != 0;
}

void FiniteModel::set_rel(const std::string& pred, const std::vector<int>& tuple,
                          bool in) {
  int i = pred_index(pred);
  if (tuple.size() != static_cast<std::size_t>(pred_arities_[i]))
    throw std::invalid_argument("tuple arity mismatch for " + pred);
  rel_[i][rank(tuple)] = in ? 1 : 0;
}

int FiniteModel::fun_value(const std::string& fn,
                           const std::vector<int>& tuple) const {
  int i = fun_index(fn);
  if (tuple.size() != static_cast<std::size_t>(fun_arities_[i]))
    throw std::invalid_argument("tuple arity mismatch for " + fn);
  return fun_[i][rank(tuple)];
}

void FiniteModel::set_fun(const std::string& fn, const std::vector<int>& tuple,
                          int value) {
  int i = fun_index(fn);
  if (tuple.size() != static_cast<std::size_t>(fun_arities_[i]))
    throw std::invalid_argument("tuple arity mismatch for " + fn);
  check_range(value);
  fun_[i][rank(tuple)] = value;
}

int FiniteModel::const_value(const std::string& name) const {
  return cst_[const_index(name)];
}

void FiniteModel::set_const(const std::string& name, int value) {
  check_range(value);
  cst_[const_index(name)] = value;
}

bool FiniteModel::operator==(const FiniteModel& other) const {
  return sig_ == other.sig_ && size_ == other.size_ && rel_ == other.rel_ &&
         fun_ == other.fun_ && cst_ == other.cst_;
}

bool evaluate(const FiniteModel& m, const Formula& f, const Assignment& a) {
  CompiledFormula cf(f, m.signature());
  return cf.eval(m, a);
}

bool is_closed_subset(const FiniteModel& m, std::uint64_t subset) {
  if (subset == 0) return false;
  for (int c = 0; c < m.const_count(); ++c)
    if (!(subset >> m.const_value(c) & 1)) return false;
  int n = m.size();
  for (int fi = 0; fi < m.fun_count(); ++fi) {
    int arity = m.fun_arity(fi);
    const auto& table = m.fun_table(fi);
    // Walk the argument tuples inside the subset by odometer.
    std::vector<int> tuple(arity, -1);
    auto next_in = [&](int from) {
      for (int v = from + 1; v < n; ++v)
        if (subset >> v & 1) return v;
      return n;
    };
    bool done = false;
    for (int i = 0; i < arity; ++i) {
      tuple[i] = next_in(-1);
      if (tuple[i] == n) done = true;
    }
    while (!done) {
      if (!(subset >> table[m.rank(tuple)] & 1)) return false;
      int i = arity - 1;
      while (i >= 0) {
        tuple[i] = next_in(tuple[i]);
        if (tuple[i] < n) break;
        tuple[i] = next_in(-1);
        --i;
      }
      if (i < 0) done = true;
    }
  }
  return true;
}

std::pair<FiniteModel, std::vector<int>> restrict_to(const FiniteModel& m,
                                                     std::uint64_t subset) {
  if (subset == 0) throw std::invalid_argument("empty subset");
  if (!is_closed_subset(m, subset))
    throw std::invalid_argument("subset not closed under functions/constants");
  std::vector<int> inclusion;
  std::vector<int> back(m.size(), -1);
  for (int e = 0; e < m.size(); ++e)
    if (subset >> e & 1) {
      back[e] = static_cast<int>(inclusion.size());
      inclusion.push_back(e);
    }
  int k = static_cast<int>(inclusion.size());
  FiniteModel sub(m.signature(), k);
  for (int pi = 0; pi < m.pred_count(); ++pi) {
    int arity = m.pred_arity(pi);
    std::size_t count = sub.rel_table(pi).size();
    for (std::size_t r = 0; r < count; ++r) {
      std::vector<int> small = sub.unrank(r, arity);
      std::vector<int> big(arity);
      for (int i = 0; i < arity; ++i) big[i] = inclusion[small[i]];
      sub.rel_table(pi)[r] = m.rel_table(pi)[m.rank(big)];
    }
  }
  for (int fi = 0; fi < m.fun_count(); ++fi) {
    int arity = m.fun_arity(fi);
    std::size_t count = sub.fun_table(fi).size();
    for (std::size_t r = 0; r < count; ++r) {
      std::vector<int> small = sub.unrank(r, arity);
      std::vector<int> big(arity);
      for (int i = 0; i < arity; ++i) big[i] = inclusion[small[i]];
      sub.fun_table(fi)[r] = back[m.fun_table(fi)[m.rank(big)]];
    }
  }
  for (int c = 0; c < m.const_count(); ++c)
    sub.const_value(c) = back[m.const_value(c)];
  return {std::move(sub), std::move(inclusion)};
}

std::uint64_t generated_closure(const FiniteModel& m,
                                const std::vector<int>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("empty seed set");
  std::uint64_t cur = 0;
  for (int s : seeds) {
    if (s < 0 || s >= m.size())
      throw std::out_of_range("seed out of range: " + std::to_string(s));
    cur |= 1ULL << s;
  }
  for (int c = 0; c < m.const_count(); ++c) cur |= 1ULL << m.const_value(c);

  int n = m.size();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int fi = 0; fi < m.fun_count() && !grew; ++fi) {
      int arity = m.fun_arity(fi);
      const auto& table = m.fun_table(fi);
      std::vector<int> tuple(arity, 0);
      while (true) {
        bool inside = true;
        for (int i = 0; i < arity; ++i)
          if (!(cur >> tuple[i] & 1)) {
            inside = false;
            break;
          }
        if (inside) {
          int v = table[m.rank(tuple)];
          if (!(cur >> v & 1)) {
            cur |= 1ULL << v;
            grew = true;
          }
        }
        int i = arity - 1;
        while (i >= 0 && ++tuple[i] == n) tuple[i--] = 0;
        if (i < 0) break;
      }
    }
  }
  return cur;
}

std::pair<FiniteModel, std::vector<int>> generated_submodel(
    const FiniteModel& m, const std::vector<int>& seeds) {
  return restrict_to(m, generated_closure(m, seeds));
}

FiniteModel relabel(const FiniteModel& m, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(m.size()))
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(m.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= m.size() || seen[p])
      throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  FiniteModel out(m.signature(), m.size());
  int n = m.size();
  for (int pi = 0; pi < m.pred_count(); ++pi) {
    int arity = m.pred_arity(pi);
    std::size_t count = m.rel_table(pi).size();
    for (std::size_t r = 0; r < count; ++r) {
      if (!m.rel_table(pi)[r]) continue;
      std::vector<int> tuple = m.unrank(r, arity);
      for (auto& t : tuple) t = perm[t];
      out.rel_table(pi)[out.rank(tuple)] = 1;
    }
  }
  for (int fi = 0; fi < m.fun_count(); ++fi) {
    int arity = m.fun_arity(fi);
    std::size_t count = m.fun_table(fi).size();
    for (std::size_t r = 0; r < count; ++r) {
      std::vector<int> tuple = m.unrank(r, arity);
      for (auto& t : tuple) t = perm[t];
      out.fun_table(fi)[out.rank(tuple)] = perm[m.fun_table(fi)[r]];
    }
  }
  for (int c = 0; c < m.const_count(); ++c)
    out.const_value(c) = perm[m.const_value(c)];
  (void)n;
  return out;
}

FiniteModel canonical_form(const FiniteModel& m) {
  std::vector<int> perm(m.size());
  for (int i = 0; i < m.size(); ++i) perm[i] = i;
  FiniteModel best = m;
  std::string best_key = render_model(best);
  while (std::next_permutation(perm.begin(), perm.end())) {
    FiniteModel cand = relabel(m, perm);
    std::string key = render_model(cand);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return best;
}

}  // namespace submodal

// enumerate.cpp
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

#include "submodal/enumerate.hpp"

#include <stdexcept>

#include "submodal/compiled.hpp"
#include "submodal/transforms.hpp"

namespace submodal {

bool for_each_subuniverse(const FiniteModel& m,
                          const std::function<bool(std::uint64_t)>& fn) {
  std::uint64_t full = m.full_domain();
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (!is_closed_subset(m, mask)) continue;
    if (!fn(mask)) return false;
  }
  return true;
}

std::vector<std::uint64_t> enumerate_subuniverses(const FiniteModel& m) {
  std::vector<std::uint64_t> out;
  for_each_subuniverse(m, [&](std::uint64_t mask) {
    out.push_back(mask);
    return true;
  });
  return out;
}

namespace {

// One mutable table cell: a constant value, a function entry, or a relation
// bit. Slot order (constants, then functions, then relations; symbols
// sorted; tuples row-major) is the enumeration order contract.
struct Slot {
  enum Kind : std::uint8_t { Const, Fun, Rel } kind;
  int sym;
  std::size_t rank;
  int radix;
};

void apply_slot(FiniteModel& m, const Slot& s, int value) {
  switch (s.kind) {
    case Slot::Const:
      m.const_value(s.sym) = value;
      break;
    case Slot::Fun:
      m.fun_table(s.sym)[s.rank] = value;
      break;
    case Slot::Rel:
      m.rel_table(s.sym)[s.rank] = static_cast<std::uint8_t>(value);
      break;
  }
}

void apply_slot(PartialModel& m, const Slot& s, int value) {
  switch (s.kind) {
    case Slot::Const:
      m.cst[s.sym] = value;
      break;
    case Slot::Fun:
      m.fun[s.sym][s.rank] = value;
      break;
    case Slot::Rel:
      m.rel[s.sym][s.rank] = static_cast<std::int8_t>(value);
      break;
  }
}

std::vector<Slot> all_slots(const FiniteModel& m) {
  std::vector<Slot> slots;
  for (int c = 0; c < m.const_count(); ++c)
    slots.push_back({Slot::Const, c, 0, m.size()});
  for (int f = 0; f < m.fun_count(); ++f)
    for (std::size_t r = 0; r < m.fun_table(f).size(); ++r)
      slots.push_back({Slot::Fun, f, r, m.size()});
  for (int p = 0; p < m.pred_count(); ++p)
    for (std::size_t r = 0; r < m.rel_table(p).size(); ++r)
      slots.push_back({Slot::Rel, p, r, 2});
  return slots;
}

// Ground universal constraints harvested from the prune sentence: open
// matrices compiled once, instantiated per assignment tuple. Sound for
// pruning because a known-false open formula stays false however the
// remaining cells are filled.
struct GroundConstraints {
  std::vector<CompiledFormula> matrices;
  // (matrix index, environment) per instance
  std::vector<std::pair<int, std::vector<std::int32_t>>> instances;

  void harvest(const Formula& f, const Signature& sig, int n) {
    Formula flat = flatten(f);
    if (flat.kind() == FormulaKind::And) {
      for (const auto& c : flat.children()) harvest_one(c, sig, n);
    } else {
      harvest_one(flat, sig, n);
    }
  }

  void harvest_one(const Formula& f, const Signature& sig, int n) {
    Classification c = classify(f);
    if (c.is_open) {
      add_instances(f, sig, n, 0);
    } else if (f.kind() == FormulaKind::Forall && c.is_universal) {
      Formula flat = flatten(f);
      if (!classify(flat.child()).is_open) return;
      add_instances(flat.child(), sig, n,
                    static_cast<int>(flat.vars().size()));
    }
    // anything else is only checked on completed tables
  }

  void add_instances(const Formula& matrix, const Signature& sig, int n,
                     int nvars) {
    matrices.emplace_back(matrix, sig);
    int mi = static_cast<int>(matrices.size() - 1);
    std::vector<std::int32_t> env(
        std::max<std::size_t>(1, matrices.back().slot_count()), 0);
    std::vector<int> tuple(nvars, 0);
    // Slots follow the sorted variable names, the tuple follows the block
    // order; any fixed pairing works, since all n^nvars assignments are
    // instantiated and only the set of instances matters.
    while (true) {
      for (int i = 0; i < nvars; ++i) env[i] = tuple[i];
      instances.emplace_back(mi, env);
      int i = nvars - 1;
      while (i >= 0 && ++tuple[i] == n) tuple[i--] = 0;
      if (i < 0) break;
    }
  }
};

class PrunedSearch {
 public:
  PrunedSearch(const Signature& sig, int n, const Formula& prune,
               const std::function<bool(const FiniteModel&)>& fn)
      : sig_(sig),
        n_(n),
        scratch_(sig, n),
        partial_(sig, n),
        full_check_(prune, sig),
        fn_(fn) {
    constraints_.harvest(prune, sig, n);
    state_.assign(constraints_.instances.size(), 0);
    slots_ = all_slots(scratch_);
  }

  // Search over the given free cells only, starting from a prefilled
  // partial state (the extension search fixes the base model's cells).
  PrunedSearch(const Signature& sig, int n, const Formula& prune,
               const std::function<bool(const FiniteModel&)>& fn,
               PartialModel initial, std::vector<Slot> free_slots)
      : sig_(sig),
        n_(n),
        scratch_(sig, n),
        partial_(std::move(initial)),
        full_check_(prune, sig),
        fn_(fn) {
    constraints_.harvest(prune, sig, n);
    state_.assign(constraints_.instances.size(), 0);
    slots_ = std::move(free_slots);
  }

  bool run() {
    watch_.assign(partial_.total_cells, {});
    logs_.resize(slots_.size());
    // Evaluate every instance once against the prefilled state: decided
    // ones stay decided for good (prefilled cells never revert), the rest
    // start watching their first blocking cell.
    for (std::size_t i = 0; i < constraints_.instances.size(); ++i) {
      auto& [mi, env] = constraints_.instances[i];
      std::int32_t blocked = -1;
      Truth3 v =
          constraints_.matrices[mi].eval3(partial_, env.data(), &blocked);
      if (v == Truth3::False) return true;  // no completion can satisfy
      if (v == Truth3::True)
        state_[i] = 1;
      else
        watch_[blocked].push_back(static_cast<std::int32_t>(i));
    }
    return dfs(0);
  }

 private:
  // Undo record for one cell fill. Restoring it rewinds the watch lists to
  // the exact pre-fill state, so the invariant "an undecided instance
  // watches the first undecided cell its evaluation reads" holds at every
  // node of the search, not just on the way down.
  struct FillLog {
    std::vector<std::int32_t> saved_pending;
    std::vector<std::int32_t> appended_cells;
    std::size_t trail_mark = 0;
  };

  std::int32_t cell_of(const Slot& s) const {
    switch (s.kind) {
      case Slot::Const:
        return partial_.const_cell(s.sym);
      case Slot::Fun:
        return partial_.fun_cell(s.sym, s.rank);
      case Slot::Rel:
        return partial_.rel_cell(s.sym, s.rank);
    }
    return -1;
  }

  // Re-evaluates only the instances watching the cell that just got a
  // value. Filling cells is monotone, so an instance blocked elsewhere
  // cannot have changed its verdict. Instances decided true go on the
  // trail; still-unknown ones move to their new blocking cell.
  bool fill_propagate(std::int32_t cell, FillLog& log) {
    log.trail_mark = trail_.size();
    log.appended_cells.clear();
    log.saved_pending = std::move(watch_[cell]);
    watch_[cell].clear();
    for (std::int32_t i : log.saved_pending) {
      if (state_[i]) continue;  // decided at a shallower fill; rewind covers it
      auto& [mi, env] = constraints_.instances[i];
      std::int32_t blocked = -1;
      Truth3 v =
          constraints_.matrices[mi].eval3(partial_, env.data(), &blocked);
      if (v == Truth3::False) return false;
      if (v == Truth3::True) {
        state_[i] = 1;
        trail_.push_back(i);
      } else {
        watch_[blocked].push_back(i);
        log.appended_cells.push_back(blocked);
      }
    }
    return true;
  }

  void undo_fill(std::int32_t cell, FillLog& log) {
    while (trail_.size() > log.trail_mark) {
      state_[trail_.back()] = 0;
      trail_.pop_back();
    }
    for (auto it = log.appended_cells.rbegin(); it != log.appended_cells.rend();
         ++it)
      watch_[*it].pop_back();
    watch_[cell] = std::move(log.saved_pending);
  }

  bool dfs(std::size_t depth) {
    if (depth == slots_.size()) {
      if (full_check_.eval3_closed(partial_) != Truth3::True) return true;
      materialize();
      return fn_(scratch_);
    }
    const Slot& slot = slots_[depth];
    std::int32_t cell = cell_of(slot);
    FillLog& log = logs_[depth];
    for (int v = 0; v < slot.radix; ++v) {
      apply_slot(partial_, slot, v);
      bool ok = fill_propagate(cell, log);
      if (ok && !dfs(depth + 1)) return false;
      undo_fill(cell, log);
    }
    apply_slot(partial_, slot, -1);  // leave the cell undecided again
    return true;
  }

  void materialize() {
    for (int c = 0; c < scratch_.const_count(); ++c)
      scratch_.const_value(c) = partial_.cst[c];
    for (int f = 0; f < scratch_.fun_count(); ++f) {
      auto& dst = scratch_.fun_table(f);
      for (std::size_t r = 0; r < dst.size(); ++r)
        dst[r] = partial_.fun[f][r];
    }
    for (int p = 0; p < scratch_.pred_count(); ++p) {
      auto& dst = scratch_.rel_table(p);
      for (std::size_t r = 0; r < dst.size(); ++r)
        dst[r] = static_cast<std::uint8_t>(partial_.rel[p][r]);
    }
  }

  const Signature& sig_;
  int n_;
  FiniteModel scratch_;
  PartialModel partial_;
  CompiledFormula full_check_;
  const std::function<bool(const FiniteModel&)>& fn_;
  GroundConstraints constraints_;
  std::vector<std::uint8_t> state_;
  std::vector<std::vector<std::int32_t>> watch_;
  std::vector<std::int32_t> trail_;
  std::vector<FillLog> logs_;
  std::vector<Slot> slots_;
};

}  // namespace

bool for_each_model(const Signature& sig, int n, const Formula* prune,
                    const std::function<bool(const FiniteModel&)>& fn) {
  if (n < 1) throw std::invalid_argument("model size must be >= 1");
  if (prune) {
    if (!is_sentence(*prune))
      throw std::invalid_argument("prune formula must be a sentence");
    PrunedSearch search(sig, n, *prune, fn);
    return search.run();
  }
  FiniteModel m(sig, n);
  std::vector<Slot> slots = all_slots(m);
  std::vector<int> values(slots.size(), 0);
  // tables start all zero / all empty, which is the first model
  while (true) {
    if (!fn(m)) return false;
    std::size_t i = slots.size();
    while (i > 0) {
      --i;
      if (++values[i] < slots[i].radix) {
        apply_slot(m, slots[i], values[i]);
        break;
      }
      values[i] = 0;
      apply_slot(m, slots[i], 0);
      if (i == 0) return true;
    }
    if (slots.empty()) return true;
  }
}

std::vector<FiniteModel> enumerate_models(const Signature& sig, int n,
                                          const Formula* prune) {
  std::vector<FiniteModel> out;
  for_each_model(sig, n, prune, [&](const FiniteModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<std::uint64_t> count_models(const Signature& sig, int max_size,
                                        const Formula* prune) {
  std::vector<std::uint64_t> counts;
  for (int n = 1; n <= max_size; ++n) {
    std::uint64_t c = 0;
    for_each_model(sig, n, prune, [&](const FiniteModel&) {
      ++c;
      return true;
    });
    counts.push_back(c);
  }
  return counts;
}

std::uint64_t model_space_size(const Signature& sig, int n) {
  if (n < 1) throw std::invalid_argument("model size must be >= 1");
  FiniteModel probe(sig, n);
  std::vector<Slot> slots = all_slots(probe);
  constexpr std::uint64_t kCap = std::uint64_t{1} << 62;
  std::uint64_t total = 1;
  for (const auto& s : slots) {
    if (total > kCap / static_cast<std::uint64_t>(s.radix))
      throw std::invalid_argument("model space too large to index");
    total *= static_cast<std::uint64_t>(s.radix);
  }
  return total;
}

bool for_each_model_range(const Signature& sig, int n, std::uint64_t lo,
                          std::uint64_t hi,
                          const std::function<bool(const FiniteModel&)>& fn) {
  std::uint64_t total = model_space_size(sig, n);
  if (lo > hi || hi > total) throw std::invalid_argument("bad model range");
  if (lo == hi) return true;

  FiniteModel m(sig, n);
  std::vector<Slot> slots = all_slots(m);
  std::vector<int> values(slots.size(), 0);
  // mixed-radix decode of lo, last slot least significant
  std::uint64_t rest = lo;
  for (std::size_t i = slots.size(); i > 0; --i) {
    values[i - 1] = static_cast<int>(rest % slots[i - 1].radix);
    rest /= slots[i - 1].radix;
    apply_slot(m, slots[i - 1], values[i - 1]);
  }
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (!fn(m)) return false;
    if (idx + 1 == hi) break;
    std::size_t i = slots.size();
    while (i > 0) {
      --i;
      if (++values[i] < slots[i].radix) {
        apply_slot(m, slots[i], values[i]);
        break;
      }
      values[i] = 0;
      apply_slot(m, slots[i], 0);
    }
  }
  return true;
}

bool for_each_extension(const FiniteModel& m, int k,
                        const std::function<bool(const FiniteModel&)>& fn) {
  if (k < m.size())
    throw std::invalid_argument("extension bound below the model size");
  int base = m.size();
  for (int n = base; n <= k; ++n) {
    FiniteModel ext(m.signature(), n);
    // copy the old tables into the prefix
    for (int p = 0; p < m.pred_count(); ++p) {
      int arity = m.pred_arity(p);
      const auto& src = m.rel_table(p);
      for (std::size_t r = 0; r < src.size(); ++r) {
        if (!src[r]) continue;
        ext.rel_table(p)[ext.rank(m.unrank(r, arity))] = 1;
      }
    }
    for (int f = 0; f < m.fun_count(); ++f) {
      int arity = m.fun_arity(f);
      const auto& src = m.fun_table(f);
      for (std::size_t r = 0; r < src.size(); ++r)
        ext.fun_table(f)[ext.rank(m.unrank(r, arity))] = src[r];
    }
    for (int c = 0; c < m.const_count(); ++c)
      ext.const_value(c) = m.const_value(c);

    // free cells: tuples touching at least one new element
    std::vector<Slot> slots;
    for (int f = 0; f < m.fun_count(); ++f) {
      int arity = m.fun_arity(f);
      for (std::size_t r = 0; r < ext.fun_table(f).size(); ++r) {
        auto tuple = ext.unrank(r, arity);
        bool fresh = false;
        for (int t : tuple)
          if (t >= base) fresh = true;
        if (fresh) slots.push_back({Slot::Fun, f, r, n});
      }
    }
    for (int p = 0; p < m.pred_count(); ++p) {
      int arity = m.pred_arity(p);
      for (std::size_t r = 0; r < ext.rel_table(p).size(); ++r) {
        auto tuple = ext.unrank(r, arity);
        bool fresh = false;
        for (int t : tuple)
          if (t >= base) fresh = true;
        if (fresh) slots.push_back({Slot::Rel, p, r, 2});
      }
    }

    std::vector<int> values(slots.size(), 0);
    for (const auto& s : slots) apply_slot(ext, s, 0);
    while (true) {
      if (!fn(ext)) return false;
      if (slots.empty()) break;
      std::size_t i = slots.size();
      bool done = false;
      while (i > 0) {
        --i;
        if (++values[i] < slots[i].radix) {
          apply_slot(ext, slots[i], values[i]);
          break;
        }
        values[i] = 0;
        apply_slot(ext, slots[i], 0);
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  return true;
}

std::vector<FiniteModel> enumerate_extensions(const FiniteModel& m, int k) {
  std::vector<FiniteModel> out;
  for_each_extension(m, k, [&](const FiniteModel& ext) {
    out.push_back(ext);
    return true;
  });
  return out;
}

bool exists_extension_satisfying(const FiniteModel& m, int k,
                                 const Formula& phi) {
  if (k < m.size())
    throw std::invalid_argument("extension bound below the model size");
  if (!is_sentence(phi))
    throw std::invalid_argument("extension search takes a sentence");
  int base = m.size();
  for (int n = base; n <= k; ++n) {
    PartialModel pm(m.signature(), n);
    std::vector<Slot> free_slots;
    for (int p = 0; p < m.pred_count(); ++p) {
      int arity = m.pred_arity(p);
      FiniteModel probe(m.signature(), n);
      for (std::size_t r = 0; r < pm.rel[p].size(); ++r) {
        auto tuple = probe.unrank(r, arity);
        bool fresh = false;
        for (int t : tuple)
          if (t >= base) fresh = true;
        if (fresh)
          free_slots.push_back({Slot::Rel, p, r, 2});
        else
          pm.rel[p][r] = m.rel_table(p)[m.rank(tuple)];
      }
    }
    for (int f = 0; f < m.fun_count(); ++f) {
      int arity = m.fun_arity(f);
      FiniteModel probe(m.signature(), n);
      for (std::size_t r = 0; r < pm.fun[f].size(); ++r) {
        auto tuple = probe.unrank(r, arity);
        bool fresh = false;
        for (int t : tuple)
          if (t >= base) fresh = true;
        if (fresh)
          free_slots.push_back({Slot::Fun, f, r, n});
        else
          pm.fun[f][r] = m.fun_table(f)[m.rank(tuple)];
      }
    }
    for (int c = 0; c < m.const_count(); ++c) pm.cst[c] = m.const_value(c);

    // reorder to the canonical slot order: functions before relations
    std::stable_sort(free_slots.begin(), free_slots.end(),
                     [](const Slot& a, const Slot& b) {
                       if (a.kind != b.kind) return a.kind < b.kind;
                       if (a.sym != b.sym) return a.sym < b.sym;
                       return a.rank < b.rank;
                     });

    bool found = false;
    PrunedSearch search(m.signature(), n, phi,
                        [&](const FiniteModel&) {
                          found = true;
                          return false;
                        },
                        std::move(pm), std::move(free_slots));
    search.run();
    if (found) return true;
  }
  return false;
}

}  // namespace submodal

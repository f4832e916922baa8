#include "ucf/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "ucf/dual_analysis.hpp"

namespace ucf {
namespace {

// Bit s of a Bitmap marks subset s of the ground set as a member (n <= 6).
using Bitmap = std::uint64_t;

constexpr Bitmap bit(Mask s) { return Bitmap{1} << s; }

struct Extent {
  int smallest = 0;  // over non-empty members
  int largest = 0;
};

Extent extent_of(Bitmap fam) {
  Extent e{kMaxGround + 1, 0};
  for (Bitmap b = fam; b != 0; b &= b - 1) {
    const int size = std::popcount(static_cast<Mask>(std::countr_zero(b)));
    e.smallest = std::min(e.smallest, size);
    e.largest = std::max(e.largest, size);
  }
  return e;
}

bool union_closed(Bitmap fam) {
  for (Bitmap a = fam; a != 0; a &= a - 1) {
    const Mask s = static_cast<Mask>(std::countr_zero(a));
    for (Bitmap b = a & (a - 1); b != 0; b &= b - 1) {
      const Mask t = static_cast<Mask>(std::countr_zero(b));
      if ((fam & bit(s | t)) == 0) return false;
    }
  }
  return true;
}

/// fam holds non-empty sets only and is nonzero.
bool accepts(const EnumFilter& f, Bitmap fam) {
  const Extent e = extent_of(fam);
  if (f.bound == SizeBound::AtMost ? e.largest > f.n : e.largest != f.n) return false;
  if (e.smallest < f.k_min) return false;
  if (f.require_exact_kn && (e.smallest != f.k_min || e.largest != f.n)) return false;
  return true;
}

class Emitter {
 public:
  Emitter(const EnumFilter& filter, const FamilyVisitor& visit)
      : filter_(filter), ground_(filter.n), visit_(visit) {}

  /// Handles a closed family of non-empty sets, possibly the empty family.
  void operator()(Bitmap fam) {
    if (fam == 0) {
      if (filter_.allow_empty_set && filter_.bound == SizeBound::AtMost && !filter_.require_exact_kn) {
        visit_(make_family_unchecked(ground_, {MemberSet()}));
      }
      return;
    }
    if (!accepts(filter_, fam)) return;
    sets_.clear();
    for (Bitmap b = fam; b != 0; b &= b - 1) sets_.emplace_back(static_cast<Mask>(std::countr_zero(b)));
    visit_(make_family_unchecked(ground_, sets_));
    if (filter_.allow_empty_set) {
      sets_.emplace_back(Mask{0});
      visit_(make_family_unchecked(ground_, sets_));
    }
  }

 private:
  const EnumFilter& filter_;
  GroundSize ground_;
  const FamilyVisitor& visit_;
  std::vector<MemberSet> sets_;
};

std::pair<std::uint64_t, std::uint64_t> slice(std::uint64_t total, std::size_t part, std::size_t parts) {
  // total <= 2^15 here, so the products cannot overflow.
  return {total * part / parts, total * (part + 1) / parts};
}

// --- subfamily filter -------------------------------------------------------

void filter_part(const EnumFilter& f, std::size_t part, std::size_t parts, const FamilyVisitor& visit) {
  const int positions = (1 << f.n) - 1;
  const auto [first, last] = slice(std::uint64_t{1} << positions, part, parts);
  Emitter emit(f, visit);
  for (std::uint64_t candidate = first; candidate < last; ++candidate) {
    // Candidate bit i stands for subset i + 1.
    const Bitmap fam = candidate << 1;
    if (union_closed(fam)) emit(fam);
  }
}

// --- generator closure ------------------------------------------------------

class ClosureWalker {
 public:
  explicit ClosureWalker(const EnumFilter& f) : filter_(f) {
    for (Mask s = 1; s < (Mask{1} << f.n); ++s) order_.emplace_back(s);
    std::sort(order_.begin(), order_.end());
  }

  struct State {
    std::size_t index;
    Bitmap fam;
  };

  /// DFS states after the first `depth` decisions, in DFS order.
  std::vector<State> frontier(std::size_t depth) const {
    std::vector<State> out;
    expand({0, 0}, depth, [&out](State s) { out.push_back(s); });
    return out;
  }

  void run(State from, Emitter& emit) const {
    expand(from, order_.size(), [&emit](State s) { emit(s.fam); });
  }

  [[nodiscard]] std::size_t size() const noexcept { return order_.size(); }

 private:
  template <typename Leaf>
  void expand(State st, std::size_t stop, Leaf&& leaf) const {
    if (st.index >= stop) {
      leaf(st);
      return;
    }
    const MemberSet s = order_[st.index];
    const bool forced = (st.fam & bit(s.bits)) != 0;
    // Sets below k_min can never appear in an accepted family.
    const bool allowed = s.size() >= filter_.k_min;
    expand({st.index + 1, st.fam}, stop, leaf);
    if (!forced && allowed) expand({st.index + 1, with_set(st.fam, s.bits)}, stop, leaf);
  }

  static Bitmap with_set(Bitmap fam, Mask s) {
    Bitmap out = fam | bit(s);
    for (Bitmap b = fam; b != 0; b &= b - 1) out |= bit(s | static_cast<Mask>(std::countr_zero(b)));
    return out;
  }

  const EnumFilter& filter_;
  std::vector<MemberSet> order_;
};

void closure_part(const EnumFilter& f, std::size_t part, std::size_t parts, const FamilyVisitor& visit) {
  const ClosureWalker walker(f);
  const auto units = walker.frontier(std::min<std::size_t>(walker.size(), 10));
  const auto [first, last] = slice(units.size(), part, parts);
  Emitter emit(f, visit);
  for (std::uint64_t u = first; u < last; ++u) walker.run(units[u], emit);
}

// --- parallel driver --------------------------------------------------------

template <typename PartFn>
void run_parts(std::size_t parts, unsigned jobs, PartFn&& fn) {
  if (jobs <= 1) {
    for (std::size_t p = 0; p < parts; ++p) fn(p);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    workers.emplace_back([&] {
      try {
        for (std::size_t p = next++; p < parts; p = next++) fn(p);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

std::size_t parts_for(unsigned jobs) { return jobs <= 1 ? 1 : static_cast<std::size_t>(jobs) * 8; }

}  // namespace

void validate(const EnumFilter& filter) {
  const int cap = filter.strategy == EnumStrategy::SubfamilyFilter ? kMaxFilterGround : kMaxClosureGround;
  if (filter.n < 1 || filter.n > cap) {
    throw Error(Errc::InfeasibleBound, "n = " + std::to_string(filter.n) + " is outside [1, " +
                                           std::to_string(cap) + "] for this enumeration strategy");
  }
}

void for_each_ucf(const EnumFilter& filter, const FamilyVisitor& visit) {
  for_each_ucf_in_part(filter, 0, 1, visit);
}

void for_each_ucf_in_part(const EnumFilter& filter, std::size_t part, std::size_t parts,
                          const FamilyVisitor& visit) {
  validate(filter);
  if (parts == 0 || part >= parts) throw Error(Errc::BadParams, "part index out of range");
  if (filter.strategy == EnumStrategy::SubfamilyFilter) {
    filter_part(filter, part, parts, visit);
  } else {
    closure_part(filter, part, parts, visit);
  }
}

std::vector<SetFamily> enumerate_ucf(const EnumFilter& filter, unsigned jobs) {
  validate(filter);
  const std::size_t parts = parts_for(jobs);
  std::vector<std::vector<SetFamily>> chunks(parts);
  run_parts(parts, jobs, [&](std::size_t p) {
    for_each_ucf_in_part(filter, p, parts, [&chunk = chunks[p]](const SetFamily& f) { chunk.push_back(f); });
  });
  std::vector<SetFamily> out;
  for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(out));
  return out;
}

bool family_less(const SetFamily& a, const SetFamily& b) {
  if (a.ground_size() != b.ground_size()) return a.ground_size() < b.ground_size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void SearchReport::add(const SetFamily& family) {
  const AbundanceReport r = analyze(family);
  ++total_families;

  const auto key = std::make_pair(r.smallest_size(), r.n_max);
  auto [it, inserted] = min_f_by_kn.try_emplace(key, r.f);
  if (!inserted) it->second = std::min(it->second, r.f);

  if (!min_f || r.f < *min_f) {
    min_f = r.f;
    witnesses.assign(1, family);
  } else if (r.f == *min_f) {
    witnesses.insert(std::upper_bound(witnesses.begin(), witnesses.end(), family, family_less), family);
    if (witnesses.size() > kWitnessCap) witnesses.pop_back();
  }
}

void SearchReport::merge(const SearchReport& other) {
  total_families += other.total_families;
  for (const auto& [key, f] : other.min_f_by_kn) {
    auto [it, inserted] = min_f_by_kn.try_emplace(key, f);
    if (!inserted) it->second = std::min(it->second, f);
  }
  if (!other.min_f) return;
  if (!min_f || *other.min_f < *min_f) {
    min_f = other.min_f;
    witnesses = other.witnesses;
    return;
  }
  if (*other.min_f == *min_f) {
    std::vector<SetFamily> merged;
    merged.reserve(witnesses.size() + other.witnesses.size());
    std::merge(witnesses.begin(), witnesses.end(), other.witnesses.begin(), other.witnesses.end(),
               std::back_inserter(merged), family_less);
    if (merged.size() > kWitnessCap) merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(kWitnessCap), merged.end());
    witnesses = std::move(merged);
  }
}

SearchReport min_f_search(const EnumFilter& filter, unsigned jobs) {
  validate(filter);
  const std::size_t parts = parts_for(jobs);
  std::vector<SearchReport> partial(parts);
  run_parts(parts, jobs, [&](std::size_t p) {
    for_each_ucf_in_part(filter, p, parts, [&report = partial[p]](const SetFamily& f) { report.add(f); });
  });
  SearchReport total;
  for (const auto& r : partial) total.merge(r);
  return total;
}

bool verify_theorem5_exhaustive(int n_bound, unsigned jobs) {
  EnumFilter filter;
  filter.n = n_bound;
  validate(filter);
  const std::size_t parts = parts_for(jobs);
  std::atomic<bool> ok{true};
  run_parts(parts, jobs, [&](std::size_t p) {
    for_each_ucf_in_part(filter, p, parts, [&ok](const SetFamily& f) {
      if (!check_theorem5(f).all_hold()) ok = false;
    });
  });
  return ok;
}

}  // namespace ucf

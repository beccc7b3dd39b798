#include "wtenum/engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "wtenum/error.hpp"
#include "wtenum/number_theory.hpp"
#include "wtenum/quadform.hpp"

namespace wtenum {

std::uint64_t tier_budget(Tier tier) {
  switch (tier) {
    case Tier::kQuick:
      return std::uint64_t{1} << 24;
    case Tier::kStandard:
      return std::uint64_t{1} << 32;
    case Tier::kExtended:
      return std::uint64_t{1} << 38;
  }
  return 0;
}

std::string_view tier_name(Tier tier) {
  switch (tier) {
    case Tier::kQuick:
      return "quick";
    case Tier::kStandard:
      return "standard";
    case Tier::kExtended:
      return "extended";
  }
  return "?";
}

std::optional<Tier> parse_tier(std::string_view name) {
  if (name == "quick") return Tier::kQuick;
  if (name == "standard") return Tier::kStandard;
  if (name == "extended") return Tier::kExtended;
  return std::nullopt;
}

std::string_view oracle_name(OracleKind kind) { return kind == OracleKind::kBrute ? "brute" : "rank_sweep"; }

std::optional<OracleKind> parse_oracle(std::string_view name) {
  if (name == "brute") return OracleKind::kBrute;
  if (name == "rank_sweep") return OracleKind::kRankSweep;
  return std::nullopt;
}

namespace {

using u64 = std::uint64_t;

std::optional<u64> mul_checked(u64 a, u64 b) {
  u64 out;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<u64> add_checked(std::optional<u64> a, std::optional<u64> b) {
  u64 out;
  if (!a || !b || __builtin_add_overflow(*a, *b, &out)) return std::nullopt;
  return out;
}

u64 form_count(const CodeSpec& spec) {
  return ipow(spec.q, static_cast<unsigned>(spec.m * spec.m));
}

u64 sample_stride(u64 forms) { return std::max<u64>(1, forms / 256); }

// The coefficient space as F_p-coordinates: digits of delta_0 in the basis
// gamma^d (gamma = pi^(q^m+1) generates F_{q^m}), then the polynomial-basis
// digits of each lambda_j. Coordinate 0 varies fastest.
struct FormSpace {
  struct Coordinate {
    Elem basis;
    int slot;  // -1 for delta_0, j for lambda_(j+1)
  };

  std::shared_ptr<const FieldCtx> field;
  std::vector<Coordinate> coords;
  u64 forms = 0;

  explicit FormSpace(const CodeSpec& spec) : field(spec.field) {
    const FieldCtx& F = *field;
    if (spec.odd()) {
      const Elem gamma = F.exp(spec.delta0_exponent() % F.n());
      Elem g = F.one();
      for (int d = 0; d < F.e() * spec.m; ++d) {
        coords.push_back({g, -1});
        g = F.mul(g, gamma);
      }
    }
    for (int j = 0; j < spec.t(); ++j) {
      u64 unit = 1;
      for (int d = 0; d < F.degree(); ++d, unit *= F.p()) {
        coords.push_back({Elem{static_cast<std::uint32_t>(unit)}, j});
      }
    }
    forms = ipow(F.p(), static_cast<unsigned>(coords.size()));
    if (forms != form_count(spec)) throw ConsistencyError("coordinate count does not match q^(m^2)");
  }

  QuadForm form(const std::vector<std::uint32_t>& digits) const {
    const FieldCtx& F = *field;
    std::optional<Elem> delta0;
    if (F.m() % 2 == 1) delta0 = F.zero();
    std::vector<Elem> lambdas(static_cast<std::size_t>(F.m() / 2), F.zero());
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const Elem term = F.scale(coords[k].basis, digits[k]);
      Elem& target = coords[k].slot < 0 ? *delta0 : lambdas[static_cast<std::size_t>(coords[k].slot)];
      target = F.add(target, term);
    }
    return QuadForm(field, delta0, std::move(lambdas));
  }

  QuadForm basis_form(std::size_t k) const {
    std::vector<std::uint32_t> digits(coords.size(), 0);
    digits[k] = 1;
    return form(digits);
  }

  std::vector<std::uint32_t> digits_of(u64 index) const {
    std::vector<std::uint32_t> digits(coords.size());
    for (auto& d : digits) {
      d = static_cast<std::uint32_t>(index % field->p());
      index /= field->p();
    }
    return digits;
  }
};

// Steps the base-p digits; every digit that moves (including a wrap from
// p-1 to 0) adds its basis vector once.
template <class OnChange>
void odometer_step(std::vector<std::uint32_t>& digits, std::uint32_t p, OnChange&& on_change) {
  for (std::size_t k = 0; k < digits.size(); ++k) {
    on_change(k);
    if (++digits[k] < p) return;
    digits[k] = 0;
  }
}

class ProgressTracker {
 public:
  ProgressTracker(u64 total, const std::function<void(int)>& callback) : total_(total), callback_(callback) {}

  void advance(u64 amount) {
    const u64 done = done_.fetch_add(amount) + amount;
    const int pct = static_cast<int>(static_cast<unsigned __int128>(done) * 100 / total_);
    if (pct <= reported_.load()) return;
    std::lock_guard lock(mutex_);
    while (reported_.load() < pct) {
      const int next = reported_.load() + 1;
      reported_.store(next);
      if (callback_) callback_(next);
    }
  }

 private:
  u64 total_;
  const std::function<void(int)>& callback_;
  std::atomic<u64> done_{0};
  std::atomic<int> reported_{0};
  std::mutex mutex_;
};

unsigned resolve_workers(unsigned requested, u64 total) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (total < w) w = static_cast<unsigned>(std::max<u64>(1, total));
  return w;
}

// Runs fn(worker, begin, end, tracker) over contiguous slices of [0, total).
template <class Fn>
void run_slices(u64 total, unsigned workers, const std::function<void(int)>& progress, Fn&& fn) {
  ProgressTracker tracker(total, progress);
  std::vector<std::exception_ptr> errors(workers);
  const auto slice = [&](unsigned w) {
    const u64 begin = static_cast<u64>(static_cast<unsigned __int128>(total) * w / workers);
    const u64 end = static_cast<u64>(static_cast<unsigned __int128>(total) * (w + 1) / workers);
    try {
      fn(w, begin, end, tracker);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    slice(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(slice, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void check_engine_field(const CodeSpec& spec) {
  const FieldCtx& F = *spec.field;
  if (!F.has_logs()) throw DomainError("the engine needs discrete log tables for F_{q^s}");
  if (F.q() > 65536) throw DomainError("the engine stores F_q labels in 16 bits");
}

constexpr u64 kProgressBatch = 256;

// Per-worker state for the codeword enumeration.
class BruteWorker {
 public:
  BruteWorker(const CodeSpec& spec, const FormSpace& space, const std::vector<std::vector<std::uint16_t>>& basis,
              const std::vector<std::uint16_t>& trace2, const std::vector<std::vector<u64>>& trace_planes,
              bool bitplane)
      : spec_(spec),
        F_(*spec.field),
        fq_(F_.fq()),
        space_(space),
        basis_(basis),
        trace2_(trace2),
        trace_planes_(trace_planes),
        bitplane_(bitplane),
        n_(spec.n),
        q_(static_cast<std::uint32_t>(spec.q)),
        words_((spec.n + 63) / 64),
        weights_(spec.n + 1, 0) {
    if (fq_.tabulated()) add_table_ = &fq_.add_table();
    hist_.assign(q_, 0);
    if (bitplane_) {
      qplanes_.assign(static_cast<std::size_t>(q_) * words_, 0);
      lbuf_.assign(static_cast<std::size_t>(q_) * words_, 0);
    }
    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) neg_[a] = fq_.neg(a);
  }

  void run(u64 begin, u64 end, ProgressTracker& tracker) {
    if (begin == end) return;
    auto digits = space_.digits_of(begin);
    qv_.assign(n_, 0);
    for (std::size_t k = 0; k < digits.size(); ++k) {
      for (std::uint32_t c = 0; c < digits[k]; ++c) add_basis(k);
    }
    u64 pending = 0;
    for (u64 idx = begin; idx < end; ++idx) {
      process();
      if (++pending == kProgressBatch) {
        tracker.advance(pending);
        pending = 0;
      }
      if (idx + 1 < end) odometer_step(digits, F_.p(), [&](std::size_t k) { add_basis(k); });
    }
    tracker.advance(pending);
  }

  const std::vector<u64>& weights() const { return weights_; }
  u64 work() const { return work_; }

 private:
  void add_basis(std::size_t k) {
    const auto& b = basis_[k];
    if (F_.p() == 2) {
      for (u64 i = 0; i < n_; ++i) qv_[i] ^= b[i];
    } else if (add_table_) {
      const auto& t = *add_table_;
      for (u64 i = 0; i < n_; ++i) qv_[i] = t[static_cast<std::size_t>(qv_[i]) * q_ + b[i]];
    } else {
      for (u64 i = 0; i < n_; ++i) qv_[i] = static_cast<std::uint16_t>(fq_.add(qv_[i], b[i]));
    }
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return add_table_ ? (*add_table_)[static_cast<std::size_t>(a) * q_ + b] : fq_.add(a, b);
  }

  void record(const std::vector<u64>& hist) {
    // hist[v] = #{i : Q(pi^i) + Tr(beta pi^i) = v}; the word for shift b
    // vanishes exactly where that value is -b.
    ++weights_[n_ - hist[0]];
    if (spec_.family == Family::kE) {
      for (std::uint32_t b = 1; b < q_; ++b) ++weights_[n_ - hist[neg_[b]]];
    }
  }

  void process() {
    work_ += n_;
    std::fill(hist_.begin(), hist_.end(), 0);
    for (u64 i = 0; i < n_; ++i) ++hist_[qv_[i]];
    if (spec_.family == Family::kC) {
      ++weights_[n_ - hist_[0]];
      return;
    }
    record(hist_);  // beta = 0 reuses the pass above
    work_ += n_ * n_;
    if (bitplane_) {
      process_bitplanes();
    } else {
      process_direct();
    }
  }

  void process_direct() {
    for (u64 k = 0; k < n_; ++k) {
      std::fill(hist_.begin(), hist_.end(), 0);
      const std::uint16_t* t = trace2_.data() + k;
      for (u64 i = 0; i < n_; ++i) ++hist_[add(qv_[i], t[i])];
      record(hist_);
    }
  }

  void process_bitplanes() {
    std::fill(qplanes_.begin(), qplanes_.end(), 0);
    for (u64 i = 0; i < n_; ++i) qplanes_[qv_[i] * words_ + (i >> 6)] |= u64{1} << (i & 63);
    const bool all_values = spec_.family == Family::kE;
    for (u64 k = 0; k < n_; ++k) {
      // Window [k, k + n) of the doubled trace sequence, one plane per value.
      const u64 base = k >> 6;
      const unsigned r = static_cast<unsigned>(k & 63);
      for (std::uint32_t v = 0; v < q_; ++v) {
        const u64* src = trace_planes_[v].data() + base;
        u64* dst = lbuf_.data() + static_cast<std::size_t>(v) * words_;
        if (r == 0) {
          for (u64 w = 0; w < words_; ++w) dst[w] = src[w];
        } else {
          for (u64 w = 0; w < words_; ++w) dst[w] = (src[w] >> r) | (src[w + 1] << (64 - r));
        }
      }
      std::fill(hist_.begin(), hist_.end(), 0);
      for (std::uint32_t a = 0; a < q_; ++a) {
        const u64* qa = qplanes_.data() + static_cast<std::size_t>(a) * words_;
        if (all_values) {
          for (std::uint32_t v = 0; v < q_; ++v) {
            const u64* lv = lbuf_.data() + static_cast<std::size_t>(v) * words_;
            u64 c = 0;
            for (u64 w = 0; w < words_; ++w) c += static_cast<u64>(std::popcount(qa[w] & lv[w]));
            hist_[add(a, v)] += c;
          }
        } else {
          const u64* lv = lbuf_.data() + static_cast<std::size_t>(neg_[a]) * words_;
          u64 c = 0;
          for (u64 w = 0; w < words_; ++w) c += static_cast<u64>(std::popcount(qa[w] & lv[w]));
          hist_[0] += c;
        }
      }
      record(hist_);
    }
  }

  const CodeSpec& spec_;
  const FieldCtx& F_;
  const SmallField& fq_;
  const FormSpace& space_;
  const std::vector<std::vector<std::uint16_t>>& basis_;
  const std::vector<std::uint16_t>& trace2_;
  const std::vector<std::vector<u64>>& trace_planes_;
  const std::vector<std::uint16_t>* add_table_ = nullptr;
  bool bitplane_;
  u64 n_;
  std::uint32_t q_;
  u64 words_;
  std::vector<std::uint16_t> qv_;
  std::vector<u64> hist_;
  std::vector<u64> qplanes_;
  std::vector<u64> lbuf_;
  std::vector<std::uint32_t> neg_;
  std::vector<u64> weights_;
  u64 work_ = 0;
};

WeightDistribution from_weight_counts(const CodeSpec& spec, const std::vector<u64>& counts) {
  WeightDistribution out{spec.q, spec.m, spec.family, {}};
  for (u64 w = 0; w < counts.size(); ++w) {
    if (counts[w]) out.counts[w] = counts[w];
  }
  return out;
}

// Weight rows of every form of rank r and sign eps, times `forms` such forms.
void expand_rank_rows(const CodeSpec& spec, int r, int eps, const BigInt& forms, std::map<u64, BigInt>& rows) {
  const std::int64_t q = static_cast<std::int64_t>(spec.q);
  const int s = 2 * spec.m;
  const auto qp = [q](int e) { return big_pow(BigInt(q), static_cast<unsigned>(e)); };
  const BigInt qs = qp(s);
  const BigInt w0 = qs - qp(s - 1);
  const BigInt qr = qp(r);
  const BigInt qh = qp(r / 2);
  const BigInt shift = eps * qp(s - r / 2 - 1);  // eps q^(s - r/2 - 1)
  const auto add = [&](const BigInt& w, const BigInt& numerator, const BigInt& denominator) {
    if (numerator % denominator != 0) throw ConsistencyError("non-integral row count");
    const BigInt c = numerator / denominator * forms;
    if (c == 0) return;
    if (w < 0 || w > qs - 1) throw ConsistencyError("row weight outside [0, n]");
    rows[static_cast<u64>(w)] += c;
  };
  if (spec.family == Family::kC) {
    add(w0 - shift * (q - 1), 1, 1);
    return;
  }
  add(w0, qs - qr, 1);
  add(w0 - shift * (q - 1), qr + eps * (q - 1) * qh, q);
  add(w0 + shift, (qr - eps * qh) * (q - 1), q);
  if (spec.family == Family::kE) {
    add(w0 - 1, (qs - qr) * (q - 1), 1);
    add(w0 - 1 - shift * (q - 1), (qr - eps * qh) * (q - 1), q);
    add(w0 - 1 + shift, (qr * q - qr + eps * qh) * (q - 1), q);
  }
}

// Per-worker Gram-matrix sweep.
class RankWorker {
 public:
  RankWorker(const CodeSpec& spec, const FormSpace& space, const std::vector<std::vector<std::uint32_t>>& grams)
      : F_(*spec.field), space_(space), grams_(grams), s_(F_.s()), binary_(F_.q() == 2), ranks_(s_ + 1, 0) {
    stride_ = sample_stride(space.forms);
    if (binary_) {
      rows_.resize(grams.size());
      for (std::size_t k = 0; k < grams.size(); ++k) {
        rows_[k].assign(static_cast<std::size_t>(s_), 0);
        for (int a = 0; a < s_; ++a) {
          for (int b = 0; b < s_; ++b) {
            if (grams[k][static_cast<std::size_t>(a * s_ + b)]) rows_[k][static_cast<std::size_t>(a)] |= u64{1} << b;
          }
        }
      }
    }
  }

  void run(u64 begin, u64 end, ProgressTracker& tracker) {
    if (begin == end) return;
    auto digits = space_.digits_of(begin);
    cur_.assign(static_cast<std::size_t>(s_ * s_), 0);
    cur_rows_.assign(static_cast<std::size_t>(s_), 0);
    for (std::size_t k = 0; k < digits.size(); ++k) {
      for (std::uint32_t c = 0; c < digits[k]; ++c) add_basis(k);
    }
    u64 pending = 0;
    for (u64 idx = begin; idx < end; ++idx) {
      const int r = current_rank();
      if (r % 2 != 0) throw ConsistencyError("form of odd rank " + std::to_string(r));
      ++ranks_[static_cast<std::size_t>(r)];
      work_ += static_cast<u64>(s_) * static_cast<u64>(s_);
      if (idx % stride_ == 0) cross_check(digits, r);
      if (++pending == kProgressBatch) {
        tracker.advance(pending);
        pending = 0;
      }
      if (idx + 1 < end) odometer_step(digits, F_.p(), [&](std::size_t k) { add_basis(k); });
    }
    tracker.advance(pending);
  }

  const std::vector<u64>& ranks() const { return ranks_; }
  u64 work() const { return work_; }
  u64 samples() const { return samples_; }

 private:
  void add_basis(std::size_t k) {
    if (binary_) {
      for (int a = 0; a < s_; ++a) cur_rows_[static_cast<std::size_t>(a)] ^= rows_[k][static_cast<std::size_t>(a)];
      return;
    }
    const SmallField& fq = F_.fq();
    const auto& g = grams_[k];
    for (std::size_t i = 0; i < cur_.size(); ++i) cur_[i] = fq.add(cur_[i], g[i]);
  }

  int current_rank() {
    if (!binary_) {
      scratch_ = cur_;
      return matrix_rank(scratch_, s_, F_.fq());
    }
    std::vector<u64>& rows = scratch_rows_;
    rows = cur_rows_;
    int rank = 0;
    for (int bit = 0; bit < s_; ++bit) {
      const u64 mask = u64{1} << bit;
      auto it = std::find_if(rows.begin() + rank, rows.end(), [mask](u64 row) { return row & mask; });
      if (it == rows.end()) continue;
      std::swap(*it, rows[static_cast<std::size_t>(rank)]);
      const u64 pivot = rows[static_cast<std::size_t>(rank)];
      for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
        if (rows[i] & mask) rows[i] ^= pivot;
      }
      ++rank;
    }
    return rank;
  }

  void cross_check(const std::vector<std::uint32_t>& digits, int r) {
    const QuadForm f = space_.form(digits);
    if (f.rank() != r) throw ConsistencyError("Gram sweep rank differs from the direct rank");
    const std::int64_t t = big_T(f, UINT64_MAX);
    const int expected = (r / 2) % 2 == 0 ? 1 : -1;
    if (t == 0 || (t > 0 ? 1 : -1) != expected) {
      throw ConsistencyError("sign of T_Q is not (-1)^(r/2) for a form of rank " + std::to_string(r));
    }
    work_ += F_.order();
    ++samples_;
  }

  const FieldCtx& F_;
  const FormSpace& space_;
  const std::vector<std::vector<std::uint32_t>>& grams_;
  int s_;
  bool binary_;
  u64 stride_ = 1;
  std::vector<std::vector<u64>> rows_;
  std::vector<std::uint32_t> cur_;
  std::vector<std::uint32_t> scratch_;
  std::vector<u64> cur_rows_;
  std::vector<u64> scratch_rows_;
  std::vector<u64> ranks_;
  u64 work_ = 0;
  u64 samples_ = 0;
};

}  // namespace

std::optional<u64> brute_estimate(std::uint64_t q, int m, Family family) {
  const auto qs = checked_pow(q, static_cast<unsigned>(2 * m));
  const auto forms = checked_pow(q, static_cast<unsigned>(m * m));
  if (!qs || !forms) return std::nullopt;
  const u64 n = *qs - 1;
  const auto per_form = family == Family::kC ? std::optional<u64>(n) : mul_checked(n + 1, n);
  if (!per_form) return std::nullopt;
  return mul_checked(*forms, *per_form);
}

std::optional<u64> rank_sweep_estimate(std::uint64_t q, int m, Family /*family*/) {
  const auto qs = checked_pow(q, static_cast<unsigned>(2 * m));
  const auto forms = checked_pow(q, static_cast<unsigned>(m * m));
  if (!qs || !forms) return std::nullopt;
  const u64 stride = sample_stride(*forms);
  const u64 samples = (*forms + stride - 1) / stride;
  const u64 s = static_cast<u64>(2 * m);
  return add_checked(mul_checked(*forms, s * s), mul_checked(samples, *qs));
}

std::optional<u64> brute_estimate(const CodeSpec& spec) { return brute_estimate(spec.q, spec.m, spec.family); }

std::optional<u64> rank_sweep_estimate(const CodeSpec& spec) {
  return rank_sweep_estimate(spec.q, spec.m, spec.family);
}

OracleResult brute_distribution(const CodeSpec& spec, const EngineOptions& options) {
  const auto estimate = brute_estimate(spec);
  if (!estimate || *estimate > options.budget) {
    throw BudgetExceeded("exhaustive enumeration is over budget; try rank_sweep", estimate.value_or(UINT64_MAX),
                         options.budget);
  }
  check_engine_field(spec);
  const FieldCtx& F = *spec.field;
  const FormSpace space(spec);

  std::vector<std::vector<std::uint16_t>> basis;
  for (std::size_t k = 0; k < space.coords.size(); ++k) basis.push_back(space.basis_form(k).value_sequence());

  const bool bitplane = options.kernel == Kernel::kBitplane || (options.kernel == Kernel::kAuto && spec.q <= 16);
  std::vector<std::uint16_t> trace2;
  std::vector<std::vector<u64>> planes;
  if (spec.family != Family::kC) {
    const auto tr = F.trace_sequence();
    trace2.resize(2 * spec.n);
    for (u64 i = 0; i < 2 * spec.n; ++i) trace2[i] = tr[i % spec.n];
    if (bitplane) {
      const u64 words = (2 * spec.n + 63) / 64 + 2;
      planes.assign(spec.q, std::vector<u64>(words, 0));
      for (u64 i = 0; i < 2 * spec.n; ++i) planes[trace2[i]][i >> 6] |= u64{1} << (i & 63);
    }
  }

  const unsigned workers = resolve_workers(options.workers, space.forms);
  std::vector<BruteWorker> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.emplace_back(spec, space, basis, trace2, planes, bitplane);
  run_slices(space.forms, workers, options.progress,
             [&](unsigned w, u64 begin, u64 end, ProgressTracker& tracker) { states[w].run(begin, end, tracker); });

  std::vector<u64> merged(spec.n + 1, 0);
  OracleResult result;
  for (const auto& st : states) {
    for (u64 i = 0; i <= spec.n; ++i) merged[i] += st.weights()[i];
    result.work += st.work();
  }
  result.distribution = from_weight_counts(spec, merged);
  return result;
}

OracleResult rank_sweep(const CodeSpec& spec, const EngineOptions& options) {
  const auto estimate = rank_sweep_estimate(spec);
  if (!estimate || *estimate > options.budget) {
    throw BudgetExceeded("rank sweep is over budget", estimate.value_or(UINT64_MAX), options.budget);
  }
  check_engine_field(spec);
  const FormSpace space(spec);
  std::vector<std::vector<std::uint32_t>> grams;
  for (std::size_t k = 0; k < space.coords.size(); ++k) grams.push_back(gram_matrix(space.basis_form(k)));

  const unsigned workers = resolve_workers(options.workers, space.forms);
  std::vector<RankWorker> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.emplace_back(spec, space, grams);
  run_slices(space.forms, workers, options.progress,
             [&](unsigned w, u64 begin, u64 end, ProgressTracker& tracker) { states[w].run(begin, end, tracker); });

  const int s = 2 * spec.m;
  std::vector<u64> ranks(static_cast<std::size_t>(s + 1), 0);
  OracleResult result;
  for (const auto& st : states) {
    for (int r = 0; r <= s; ++r) ranks[static_cast<std::size_t>(r)] += st.ranks()[static_cast<std::size_t>(r)];
    result.work += st.work();
  }

  RankDistribution measured{spec.q, spec.m, {}};
  std::map<u64, BigInt> rows;
  for (int r = 0; r <= s; r += 2) {
    const u64 count = ranks[static_cast<std::size_t>(r)];
    measured.counts[r / 2] = count;
    if (count == 0) continue;
    expand_rank_rows(spec, r, (r / 2) % 2 == 0 ? 1 : -1, count, rows);
  }
  result.distribution = WeightDistribution{spec.q, spec.m, spec.family, std::move(rows)};
  result.ranks = std::move(measured);
  return result;
}

namespace {

void refuse_unless_affordable(std::optional<u64> brute, std::optional<u64> sweep, u64 budget) {
  if ((brute && *brute <= budget) || (sweep && *sweep <= budget)) return;
  const u64 cheapest = std::min(brute.value_or(UINT64_MAX), sweep.value_or(UINT64_MAX));
  throw BudgetExceeded("no oracle fits the work budget", cheapest, budget);
}

}  // namespace

VerifyReport verify(const CodeSpec& spec, std::uint64_t budget, EngineOptions options) {
  options.budget = budget;
  const auto brute = brute_estimate(spec);
  const auto sweep = rank_sweep_estimate(spec);
  refuse_unless_affordable(brute, sweep, budget);

  VerifyReport report;
  report.predicted = predict(spec.q, spec.m, spec.family);
  const auto start = std::chrono::steady_clock::now();
  OracleResult result;
  if (brute && *brute <= budget) {
    report.oracle_kind = OracleKind::kBrute;
    report.estimate = *brute;
    result = brute_distribution(spec, options);
  } else {
    report.oracle_kind = OracleKind::kRankSweep;
    report.estimate = *sweep;
    result = rank_sweep(spec, options);
  }
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.oracle = std::move(result.distribution);
  report.work_count = result.work;
  report.first_difference = first_difference(report.predicted, report.oracle);
  report.equal = !report.first_difference.has_value();
  return report;
}

VerifyReport verify(const CodeSpec& spec, Tier tier, EngineOptions options) {
  return verify(spec, tier_budget(tier), std::move(options));
}

VerifyReport verify(std::uint64_t q, int m, Family family, std::uint64_t budget, EngineOptions options,
                    const FieldOptions& field_options) {
  check_prediction_domain(q, m, family);
  refuse_unless_affordable(brute_estimate(q, m, family), rank_sweep_estimate(q, m, family), budget);
  const auto pe = prime_power(q);
  const CodeSpec spec = build_code(make_field(pe->first, pe->second, 2 * m, field_options), family);
  return verify(spec, budget, std::move(options));
}

}  // namespace wtenum

#include "mereo/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

namespace mereo {
namespace {

using Rows = std::array<Mask, kMaxSearchN>;

std::uint32_t reverse_bits(Mask m, std::size_t n) {
  std::uint32_t r = 0;
  for (std::size_t j = 0; j < n; ++j)
    if ((m >> j) & 1U) r |= 1U << (n - 1 - j);
  return r;
}

// All permutations of n points, with for each permutation p:
//   inverse[k*n + t]        the old element placed at new position t
//   image[k*2^n + mask]     bit-reversed image of a row mask under p
// Bit reversal makes numeric comparison of rows agree with the encoding,
// where column 0 is the most significant bit of a row.
struct PermTable {
  std::size_t n = 0;
  std::size_t count = 0;
  std::vector<std::uint8_t> inverse;
  std::vector<std::uint8_t> image;
  std::vector<std::uint8_t> rev;  // reverse_bits for each mask
};

const PermTable& perm_table(std::size_t n) {
  static std::array<std::once_flag, kMaxSearchN + 1> flags;
  static std::array<std::unique_ptr<PermTable>, kMaxSearchN + 1> tables;
  std::call_once(flags[n], [n] {
    auto t = std::make_unique<PermTable>();
    t->n = n;
    const std::size_t width = std::size_t{1} << n;
    t->rev.resize(width);
    for (std::size_t m = 0; m < width; ++m)
      t->rev[m] = static_cast<std::uint8_t>(reverse_bits(static_cast<Mask>(m), n));
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<std::uint8_t> inv(n);
      for (std::size_t i = 0; i < n; ++i) inv[p[i]] = static_cast<std::uint8_t>(i);
      t->inverse.insert(t->inverse.end(), inv.begin(), inv.end());
      for (std::size_t m = 0; m < width; ++m) {
        Mask img = 0;
        for (std::size_t j = 0; j < n; ++j)
          if ((m >> j) & 1U) img |= bit(p[j]);
        t->image.push_back(t->rev[img]);
      }
      ++t->count;
    } while (std::next_permutation(p.begin(), p.end()));
    tables[n] = std::move(t);
  });
  return *tables[n];
}

Encoding encode_rows(const Rows& rows, std::size_t n, const PermTable& t) {
  Encoding code = 0;
  for (std::size_t i = 0; i < n; ++i) code = (code << n) | t.rev[rows[i]];
  return code;
}

// True iff no relabelling yields a lexicographically smaller row sequence.
bool canonical_rows(const Rows& rows, std::size_t n, const PermTable& t) {
  std::array<std::uint8_t, kMaxSearchN> key{};
  for (std::size_t i = 0; i < n; ++i) key[i] = t.rev[rows[i]];
  const std::size_t width = std::size_t{1} << n;
  for (std::size_t k = 1; k < t.count; ++k) {
    const std::uint8_t* inv = &t.inverse[k * n];
    const std::uint8_t* img = &t.image[k * width];
    for (std::size_t r = 0; r < n; ++r) {
      const std::uint8_t v = img[rows[inv[r]]];
      if (v < key[r]) return false;
      if (v > key[r]) break;
    }
  }
  return true;
}

Rows rows_of(const ParthoodStructure& s) {
  if (s.size() > kMaxSearchN) throw DomainError("structure too large to encode");
  Rows rows{};
  for (std::size_t i = 0; i < s.size(); ++i) rows[i] = s.wholes_of(static_cast<std::uint32_t>(i));
  return rows;
}

const std::vector<std::string>& default_labels(std::size_t n) {
  static const std::array<std::vector<std::string>, kMaxSearchN + 1> labels = [] {
    std::array<std::vector<std::string>, kMaxSearchN + 1> out;
    for (std::size_t k = 0; k <= kMaxSearchN; ++k)
      for (std::size_t i = 0; i < k; ++i) out[k].push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
  }();
  return labels[n];
}

ParthoodStructure make(const Rows& rows, std::size_t n) {
  return ParthoodStructure(default_labels(n), std::vector<Mask>(rows.begin(), rows.begin() + n));
}

struct Prune {
  bool diag = false;      // no loops
  bool asym = false;      // never both x P y and y P x (x != y)
  bool trans = false;
};

Prune prune_for(std::span<const AxiomId> axioms) {
  Prune p;
  for (AxiomId a : axioms) {
    switch (a) {
      case AxiomId::IRR:
        p.diag = true;
        break;
      case AxiomId::AS:
      case AxiomId::AC:
        p.diag = p.asym = true;
        break;
      case AxiomId::ANTIS:
        p.asym = true;
        break;
      case AxiomId::T:
        p.trans = true;
        break;
      default:
        break;
    }
  }
  return p;
}

struct State {
  Rows rows{};
  std::size_t pos = 0;
};

// Depth-first generation of relations in increasing encoding. Positions
// below `pos` are fixed; each constraint is tested as soon as all the
// entries it mentions are fixed.
class Generator {
 public:
  Generator(std::size_t n, Prune prune) : n_(n), prune_(prune) {}

  template <class Leaf>
  bool run(State& st, std::size_t end, Leaf&& leaf) const {
    if (st.pos == end) return leaf(st);
    const std::size_t i = st.pos / n_;
    const std::size_t j = st.pos % n_;
    for (int v = 0; v < 2; ++v) {
      if (v == 1) st.rows[i] |= bit(static_cast<std::uint32_t>(j));
      if (consistent(st, i, j)) {
        ++st.pos;
        const bool more = run(st, end, leaf);
        --st.pos;
        if (!more) {
          st.rows[i] &= ~bit(static_cast<std::uint32_t>(j));
          return false;
        }
      }
    }
    st.rows[i] &= ~bit(static_cast<std::uint32_t>(j));
    return true;
  }

 private:
  [[nodiscard]] bool get(const Rows& r, std::size_t a, std::size_t b) const {
    return ((r[a] >> b) & 1U) != 0;
  }
  [[nodiscard]] bool fixed(std::size_t a, std::size_t b, std::size_t pos) const {
    return a * n_ + b <= pos;
  }

  [[nodiscard]] bool consistent(const State& st, std::size_t i, std::size_t j) const {
    const Rows& r = st.rows;
    const bool v = get(r, i, j);
    if (prune_.diag && i == j && v) return false;
    if (prune_.asym && i != j && v && fixed(j, i, st.pos) && get(r, j, i)) return false;
    if (prune_.trans) {
      const std::size_t pos = st.pos;
      for (std::size_t b = 0; b < n_; ++b) {
        // (i,j) as the implied entry: i P b, b P j => i P j
        if (!v && fixed(i, b, pos) && fixed(b, j, pos) && get(r, i, b) && get(r, b, j))
          return false;
        // (i,j) as first premise: i P j, j P b => i P b
        if (v && fixed(j, b, pos) && fixed(i, b, pos) && get(r, j, b) && !get(r, i, b))
          return false;
        // (i,j) as second premise: b P i, i P j => b P j
        if (v && fixed(b, i, pos) && fixed(b, j, pos) && get(r, b, i) && !get(r, b, j))
          return false;
      }
    }
    return true;
  }

  std::size_t n_;
  Prune prune_;
};

using Filter = std::function<bool(const ParthoodStructure&)>;

struct ItemResult {
  std::vector<Encoding> accepted;
  std::uint64_t examined = 0;  // up to and including the first hit in stop mode
};

struct Job {
  std::size_t n = 0;
  Prune prune;
  bool up_to_iso = true;
  const Filter* filter = nullptr;
  bool stop_at_first = false;
};

std::size_t split_depth(std::size_t n) { return n >= 4 ? std::min<std::size_t>(n * n, 10) : 0; }

std::vector<State> prefixes(std::size_t n, Prune prune) {
  Generator gen(n, prune);
  std::vector<State> out;
  State st;
  gen.run(st, split_depth(n), [&](const State& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

ItemResult run_item(const Job& job, State st) {
  const PermTable& t = perm_table(job.n);
  Generator gen(job.n, job.prune);
  ItemResult res;
  gen.run(st, job.n * job.n, [&](const State& s) {
    if (job.up_to_iso && !canonical_rows(s.rows, job.n, t)) return true;
    ++res.examined;
    if (job.filter && !(*job.filter)(make(s.rows, job.n))) return true;
    res.accepted.push_back(encode_rows(s.rows, job.n, t));
    return !job.stop_at_first;
  });
  return res;
}

std::size_t resolve_workers(std::size_t w) {
  if (w != 0) return w;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// Runs every work item, handing results to `sink` strictly in item order.
// `sink` returns false to stop; items after that are not started.
template <class Sink>
void drive(const Job& job, std::size_t workers, Sink&& sink) {
  const std::vector<State> items = prefixes(job.n, job.prune);
  workers = resolve_workers(workers);
  const std::size_t batch = workers == 1 ? 1 : workers * 8;
  for (std::size_t begin = 0; begin < items.size(); begin += batch) {
    const std::size_t end = std::min(items.size(), begin + batch);
    std::vector<ItemResult> results(end - begin);
    if (workers == 1 || end - begin == 1) {
      for (std::size_t k = begin; k < end; ++k) results[k - begin] = run_item(job, items[k]);
    } else {
      std::atomic<std::size_t> next{begin};
      std::vector<std::thread> pool;
      const std::size_t nthreads = std::min(workers, end - begin);
      for (std::size_t w = 0; w < nthreads; ++w) {
        pool.emplace_back([&] {
          for (std::size_t k = next++; k < end; k = next++) results[k - begin] = run_item(job, items[k]);
        });
      }
      for (auto& th : pool) th.join();
    }
    for (auto& r : results)
      if (!sink(r)) return;
  }
}

std::vector<AxiomId> concat(std::span<const AxiomId> a, std::span<const AxiomId> b) {
  std::vector<AxiomId> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void check_size(std::size_t n) {
  if (n < 1 || n > kMaxSearchN)
    throw DomainError("search size must be between 1 and " + std::to_string(kMaxSearchN));
}

}  // namespace

Encoding encode(const ParthoodStructure& s) {
  const Rows rows = rows_of(s);
  return encode_rows(rows, s.size(), perm_table(s.size()));
}

ParthoodStructure decode(Encoding code, std::size_t n) {
  check_size(n);
  if (n * n < 64 && (code >> (n * n)) != 0) throw DomainError("encoding has bits beyond n*n");
  Rows rows{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((code >> (n * n - 1 - (i * n + j))) & 1U) rows[i] |= bit(static_cast<std::uint32_t>(j));
  return make(rows, n);
}

Encoding canonical_encoding(const ParthoodStructure& s) {
  const std::size_t n = s.size();
  const Rows rows = rows_of(s);
  const PermTable& t = perm_table(n);
  const std::size_t width = std::size_t{1} << n;
  Encoding best = ~Encoding{0};
  for (std::size_t k = 0; k < t.count; ++k) {
    Encoding code = 0;
    for (std::size_t r = 0; r < n; ++r)
      code = (code << n) | t.image[k * width + rows[t.inverse[k * n + r]]];
    best = std::min(best, code);
  }
  return best;
}

bool is_canonical(const ParthoodStructure& s) {
  return canonical_rows(rows_of(s), s.size(), perm_table(s.size()));
}

ParthoodStructure permute(const ParthoodStructure& s, std::span<const std::uint32_t> perm) {
  const std::size_t n = s.size();
  if (perm.size() != n) throw DomainError("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw DomainError("not a permutation");
    seen[p] = true;
  }
  std::vector<std::string> labels(n);
  std::vector<Mask> rows(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    labels[perm[i]] = s.labels()[i];
    for_each_bit(s.wholes_of(i), [&](std::uint32_t j) { rows[perm[i]] |= bit(perm[j]); });
  }
  return ParthoodStructure(std::move(labels), std::move(rows));
}

void for_each_model(std::size_t n, std::span<const AxiomId> constraints,
                    const EnumerationOptions& options, const ModelVisitor& visit) {
  check_size(n);
  const std::vector<AxiomId> cs(constraints.begin(), constraints.end());
  const Filter filter = [&cs](const ParthoodStructure& s) { return holds_all(s, cs); };
  Job job{n, prune_for(cs), options.up_to_iso, &filter, false};
  drive(job, options.workers, [&](const ItemResult& r) {
    for (Encoding c : r.accepted) visit(decode(c, n));
    return true;
  });
}

std::vector<ParthoodStructure> enumerate_models(std::size_t n,
                                                std::span<const AxiomId> constraints,
                                                bool up_to_iso, std::size_t workers) {
  std::vector<ParthoodStructure> out;
  for_each_model(n, constraints, {up_to_iso, workers},
                 [&](const ParthoodStructure& s) { out.push_back(s); });
  return out;
}

std::uint64_t count_models(std::size_t n, std::span<const AxiomId> constraints, bool up_to_iso,
                           std::size_t workers) {
  check_size(n);
  const std::vector<AxiomId> cs(constraints.begin(), constraints.end());
  const Filter filter = [&cs](const ParthoodStructure& s) { return holds_all(s, cs); };
  Job job{n, prune_for(cs), up_to_iso, &filter, false};
  std::uint64_t total = 0;
  drive(job, workers, [&](const ItemResult& r) {
    total += r.accepted.size();
    return true;
  });
  return total;
}

void sweep(std::size_t max_n, std::span<const AxiomId> ambient,
           const EnumerationOptions& options, const ModelVisitor& visit) {
  for (std::size_t n = 1; n <= max_n; ++n) for_each_model(n, ambient, options, visit);
}

SearchResult find_model(const SearchSpec& spec) {
  if (spec.max_n < 1) throw DomainError("max_n must be at least 1");
  if (spec.max_n > kMaxSearchN)
    throw DomainError("max_n exceeds the search limit of " + std::to_string(kMaxSearchN));
  for (AxiomId a : spec.require)
    if (std::find(spec.forbid.begin(), spec.forbid.end(), a) != spec.forbid.end())
      throw DomainError("axiom " + std::string(axiom_code(a)) + " both required and forbidden");

  const std::vector<AxiomId> must = concat(spec.ambient, spec.require);
  const Filter filter = [&](const ParthoodStructure& s) {
    if (!holds_all(s, must)) return false;
    return std::none_of(spec.forbid.begin(), spec.forbid.end(),
                        [&](AxiomId a) { return holds(s, a); });
  };

  SearchResult result;
  for (std::size_t n = 1; n <= spec.max_n; ++n) {
    Job job{n, prune_for(must), spec.up_to_iso, &filter, true};
    std::optional<Encoding> hit;
    drive(job, spec.workers, [&](const ItemResult& r) {
      result.explored += r.examined;
      if (!r.accepted.empty()) {
        hit = r.accepted.front();
        return false;
      }
      return true;
    });
    if (hit) {
      result.found = decode(*hit, n);
      return result;
    }
  }
  result.exhausted = true;
  return result;
}

SearchResult verify_implication(std::span<const AxiomId> ambient,
                                std::span<const AxiomId> hypothesis, AxiomId conclusion,
                                std::size_t max_n, std::size_t workers) {
  SearchSpec spec;
  spec.max_n = max_n;
  spec.ambient.assign(ambient.begin(), ambient.end());
  spec.require.assign(hypothesis.begin(), hypothesis.end());
  spec.forbid = {conclusion};
  spec.workers = workers;
  return find_model(spec);
}

}  // namespace mereo

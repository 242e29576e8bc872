#include "manifolds/bench/bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <random>
#include <sstream>
#include <system_error>

#include "manifolds/composite/power.hpp"
#include "manifolds/core/manifold.hpp"
#include "manifolds/elementary/euclidean.hpp"
#include "manifolds/elementary/sphere.hpp"
#include "manifolds/matrix/rotations.hpp"
#include "manifolds/matrix/spd.hpp"

namespace manifolds::bench {
namespace {

constexpr std::size_t kRing = 4;

template <class M>
struct Inputs {
  PointOf<M> p;
  PointOf<M> q;
  TangentOf<M> X;
};

std::size_t index_of(const std::vector<std::string>& ids, const std::string& id) {
  return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

std::mt19937_64 pair_rng(const std::string& manifold, const std::string& op, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index_of(manifold_ids(), manifold)),
                    static_cast<std::uint32_t>(index_of(op_ids(), op))};
  return std::mt19937_64(seq);
}

/// p random; X a random tangent at p rescaled to norm 1 (inside every
/// injectivity radius); q = exp_p(X) so that log_p q is defined.
template <class M>
Inputs<M> make_inputs(const M& m, std::mt19937_64& rng) {
  Inputs<M> in{m.random_point(rng), m.allocate_point(), m.allocate_tangent()};
  in.X = m.random_tangent(in.p, rng);
  const double n = norm(m, in.p, in.X);
  if (n > 0.0) scale_in_place(in.X, 1.0 / n);
  m.exp_to(in.q, in.p, in.X);
  if (!m.is_point(in.p, kDefaultTolerance) || !m.is_point(in.q, kDefaultTolerance) ||
      !m.is_tangent(in.p, in.X, kDefaultTolerance))
    throw std::runtime_error("generated benchmark inputs are invalid");
  return in;
}

template <class M>
BenchRecord bench_op(const M& m, const std::string& manifold, const std::string& op, double min_seconds,
                     std::uint64_t seed) {
  std::mt19937_64 rng = pair_rng(manifold, op, seed);
  Inputs<M> in = make_inputs(m, rng);
  do_not_optimize(&in);
  if (op == "distance") {
    std::array<double, kRing> acc{};
    return measure(manifold, op, min_seconds, [&](std::int64_t i) {
      acc[static_cast<std::size_t>(i) % kRing] = m.distance(in.p, in.q);
      do_not_optimize(acc.data());
    });
  }
  if (op == "retract") {
    std::vector<PointOf<M>> acc(kRing, m.allocate_point());
    return measure(manifold, op, min_seconds, [&](std::int64_t i) {
      retract_to(m, acc[static_cast<std::size_t>(i) % kRing], in.p, in.X, RetractionMethod::Exponential);
      do_not_optimize(acc.data());
    });
  }
  std::vector<TangentOf<M>> acc(kRing, m.allocate_tangent());
  return measure(manifold, op, min_seconds, [&](std::int64_t i) {
    inverse_retract_to(m, acc[static_cast<std::size_t>(i) % kRing], in.p, in.q,
                       InverseRetractionMethod::Logarithmic);
    do_not_optimize(acc.data());
  });
}

template <class Fn>
auto with_manifold(const std::string& id, Fn&& fn) {
  if (id == "euclidean3") return fn(Euclidean<3>());
  if (id == "so3") return fn(Rotations<3>());
  if (id == "spd3") return fn(SymmetricPositiveDefinite<3>());
  if (id == "spd3_power_128x128")
    return fn(PowerManifold<SymmetricPositiveDefinite<3>>(SymmetricPositiveDefinite<3>(), {128, 128}));
  if (id == "sphere2") return fn(Sphere<2>());
  throw std::invalid_argument("unknown manifold id: " + id);
}

double entry_sum(const auto& a) { return a.sum(); }

template <class Num>
void append_number(std::string& out, Num value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  out.append(buf.data(), end);
}

template <class Num>
Num parse_number(std::string_view field, const char* name) {
  Num value{};
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size())
    throw std::invalid_argument(std::string("malformed ") + name + " field: '" + std::string(field) + "'");
  return value;
}

const char* const kHeader = "manifold,op,reps,total_seconds,per_op_us";

}  // namespace

void validate(const BenchConfig& cfg) {
  if (!(cfg.min_seconds > 0.0)) throw std::invalid_argument("min_seconds must be positive");
  if (cfg.threads != 1) throw std::invalid_argument("only --threads 1 is supported");
  if (cfg.manifolds.empty() || cfg.ops.empty())
    throw std::invalid_argument("at least one manifold and one op must be selected");
  for (const auto& id : cfg.manifolds)
    if (index_of(manifold_ids(), id) == manifold_ids().size())
      throw std::invalid_argument("unknown manifold id: " + id);
  for (const auto& id : cfg.ops)
    if (index_of(op_ids(), id) == op_ids().size()) throw std::invalid_argument("unknown op id: " + id);
  using Period = std::chrono::steady_clock::period;
  if (static_cast<double>(Period::num) / static_cast<double>(Period::den) > 1e-6)
    throw std::runtime_error("steady clock resolution coarser than one microsecond");
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  validate(cfg);
  std::vector<BenchRecord> records;
  for (const auto& manifold : cfg.manifolds)
    for (const auto& op : cfg.ops)
      records.push_back(with_manifold(manifold, [&](const auto& m) {
        return bench_op(m, manifold, op, cfg.min_seconds, cfg.seed);
      }));
  return records;
}

double input_fingerprint(const std::string& manifold, const std::string& op, std::uint64_t seed) {
  if (index_of(op_ids(), op) == op_ids().size()) throw std::invalid_argument("unknown op id: " + op);
  return with_manifold(manifold, [&](const auto& m) {
    std::mt19937_64 rng = pair_rng(manifold, op, seed);
    const auto in = make_inputs(m, rng);
    return entry_sum(in.p) + entry_sum(in.q) + entry_sum(in.X);
  });
}

std::string emit_csv(const std::vector<BenchRecord>& records) {
  std::string out = kHeader;
  out += '\n';
  for (const auto& r : records) {
    out += r.manifold;
    out += ',';
    out += r.op;
    out += ',';
    append_number(out, r.reps);
    out += ',';
    append_number(out, r.total_seconds);
    out += ',';
    append_number(out, r.per_op_us);
    out += '\n';
  }
  return out;
}

std::vector<BenchRecord> parse_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) throw std::invalid_argument("CSV is not newline terminated");
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.empty() || lines.front() != kHeader) throw std::invalid_argument("missing or wrong CSV header");
  std::vector<BenchRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string_view> fields;
    std::string_view line = lines[i];
    for (std::size_t comma; (comma = line.find(',')) != std::string_view::npos; line.remove_prefix(comma + 1))
      fields.push_back(line.substr(0, comma));
    fields.push_back(line);
    if (fields.size() != 5) throw std::invalid_argument("CSV row " + std::to_string(i) + " has wrong field count");
    if (fields[0].empty() || fields[1].empty())
      throw std::invalid_argument("CSV row " + std::to_string(i) + " has an empty id");
    records.push_back({std::string(fields[0]), std::string(fields[1]),
                       parse_number<std::int64_t>(fields[2], "reps"),
                       parse_number<double>(fields[3], "total_seconds"),
                       parse_number<double>(fields[4], "per_op_us")});
  }
  return records;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::stringstream ss{std::string(text)};
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace manifolds::bench

#include "fibernorm/analysis.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>

#include "fibernorm/random.hpp"
#include "fibernorm/teichmuller.hpp"

namespace fibernorm {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::vector<ScanRow> eavesdrop_scan(const ChannelMessage& msg, const FibrationDatabase& db,
                                    std::uint64_t n_max, const Budget& budget) {
  std::vector<ScanRow> rows;
  rows.reserve(db.size());
  for (const auto& entry : db.entries()) {
    const auto start = Clock::now();
    ScanRow row;
    row.phi = entry.phi;
    for (const Word& w : msg.elements) {
      if (evaluate_class(entry.phi, w) == 0) {
        ++row.members;
      }
    }
    if (entry.full_data && entry.full_data->embedding &&
        row.members >= entry.full_data->generators().size()) {
      try {
        SharedKey key = bob_recover(entry, msg, n_max, MappingTorus::canonical(), budget);
        row.recovered_n = key.N;
        row.key = std::move(key);
      } catch (const RecoveryFailure&) {
      } catch (const BudgetExceeded&) {
        // reported as a failed row
      }
    }
    row.ms = elapsed_ms(start);
    rows.push_back(std::move(row));
  }
  return rows;
}

DistortionReport distortion_report(const FibrationEntry& entry, std::uint64_t n_max,
                                   const Budget& budget) {
  if (!entry.full_data) {
    throw DomainError("distortion report needs fiber data for " + to_string(entry.phi));
  }
  const FiberData& data = *entry.full_data;
  const double lambda = stretch_factor(entry.phi);
  DistortionReport report;
  std::vector<Word> images;
  for (std::size_t g = 0; g < data.generators().size(); ++g) {
    images.push_back(Word::generator(g));
  }
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      try {
        for (auto& w : images) {
          w = apply(data.automorphism, w, budget);
        }
      } catch (const BudgetExceeded& ex) {
        report.truncated = true;
        report.truncation_reason = ex.what();
        break;
      }
    }
    DistortionRow row;
    row.n = n;
    for (const auto& w : images) {
      row.length = std::max<std::uint64_t>(row.length, w.size());
    }
    row.raw_length = 1 + 2 * n;
    if (!report.rows.empty() && report.rows.back().length > 0) {
      row.ratio = static_cast<double>(row.length) / static_cast<double>(report.rows.back().length);
    }
    row.predicted = std::pow(lambda, static_cast<double>(n));
    report.rows.push_back(row);
  }
  return report;
}

std::vector<MembershipTiming> membership_bench(const std::vector<std::size_t>& lengths,
                                               std::uint64_t seed, double min_seconds) {
  std::vector<MembershipTiming> out;
  SeededRng rng(seed);
  const CohomologyClass phi{2, 1};
  volatile std::int64_t sink = 0;
  for (std::size_t len : lengths) {
    std::vector<Letter> letters;
    letters.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
      letters.emplace_back(static_cast<std::size_t>(rng.below(4)), rng.coin() ? 1 : -1);
    }
    const Word w(std::move(letters));
    MembershipTiming best{len, 0, 0.0};
    for (int trial = 0; trial < 3; ++trial) {
      std::size_t reps = 0;
      const auto start = Clock::now();
      double secs = 0.0;
      do {
        sink = sink + evaluate_class(phi, w);
        ++reps;
        secs = std::chrono::duration<double>(Clock::now() - start).count();
      } while (secs < min_seconds);
      const double ns = secs * 1e9 / static_cast<double>(reps);
      if (trial == 0 || ns < best.ns_per_call) {
        best.ns_per_call = ns;
        best.repetitions = reps;
      }
    }
    out.push_back(best);
  }
  return out;
}

double linear_fit_r2(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) {
    throw DomainError("linear fit needs at least two paired points");
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) {
    return syy == 0 ? 1.0 : 0.0;
  }
  return (sxy * sxy) / (sxx * syy);
}

void write_distortion_csv(std::ostream& out, const DistortionReport& report) {
  out << "N,length,ratio,predicted\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.length << ',';
    if (r.ratio) {
      out << std::fixed << std::setprecision(6) << *r.ratio;
    }
    out << ',' << std::setprecision(6) << std::scientific << r.predicted << std::defaultfloat
        << '\n';
  }
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "a,b,recovered_N,success,ms\n";
  for (const auto& r : rows) {
    out << r.phi.a << ',' << r.phi.b << ',';
    if (r.recovered_n) {
      out << *r.recovered_n;
    }
    out << ',' << (r.success() ? 1 : 0) << ',' << std::fixed << std::setprecision(3) << r.ms
        << std::defaultfloat << '\n';
  }
}

void write_membership_csv(std::ostream& out, const std::vector<MembershipTiming>& rows) {
  out << "length,repetitions,ns_per_call\n";
  for (const auto& r : rows) {
    out << r.length << ',' << r.repetitions << ',' << std::fixed << std::setprecision(1)
        << r.ns_per_call << std::defaultfloat << '\n';
  }
}

}  // namespace fibernorm

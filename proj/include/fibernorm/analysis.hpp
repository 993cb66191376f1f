#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fibernorm/fibration_db.hpp"
#include "fibernorm/protocol.hpp"

namespace fibernorm {

// One database entry tried by the eavesdropper.
struct ScanRow {
  CohomologyClass phi;
  std::size_t members = 0;  // elements with phi value zero
  std::optional<std::uint64_t> recovered_n;
  std::optional<SharedKey> key;
  double ms = 0.0;

  bool success() const noexcept { return recovered_n.has_value(); }
};

// Tries every database entry with Bob's own procedure; rows in database
// order. Entries without fiber data only get the membership filter.
std::vector<ScanRow> eavesdrop_scan(const ChannelMessage& msg, const FibrationDatabase& db,
                                    std::uint64_t n_max, const Budget& budget = {});

struct DistortionRow {
  std::uint64_t n = 0;
  std::uint64_t length = 0;        // l_max at n
  std::uint64_t raw_length = 0;    // |t^-n s t^n| = 1 + 2n
  std::optional<double> ratio;     // length(n) / length(n-1)
  double predicted = 0.0;          // lambda^n
};

struct DistortionReport {
  std::vector<DistortionRow> rows;
  bool truncated = false;
  std::string truncation_reason;
};

// Rows n = 0..n_max; stops early (truncated) when the budget runs out.
DistortionReport distortion_report(const FibrationEntry& entry, std::uint64_t n_max,
                                   const Budget& budget = {});

struct MembershipTiming {
  std::size_t length = 0;
  std::size_t repetitions = 0;
  double ns_per_call = 0.0;
};

// Times evaluate_class on seeded random raw words of each length; each
// point repeats until at least min_seconds have elapsed (best of 3).
std::vector<MembershipTiming> membership_bench(const std::vector<std::size_t>& lengths,
                                               std::uint64_t seed = 0,
                                               double min_seconds = 0.02);

// Coefficient of determination of the least-squares line y = c0 + c1 x.
double linear_fit_r2(const std::vector<double>& x, const std::vector<double>& y);

// N,length,ratio,predicted
void write_distortion_csv(std::ostream& out, const DistortionReport& report);
// a,b,recovered_N,success,ms
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);
// length,repetitions,ns_per_call
void write_membership_csv(std::ostream& out, const std::vector<MembershipTiming>& rows);

}  // namespace fibernorm

// Copyright 2026 The graphpe Authors
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

#include "graphpe/profiler.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <thread>

#include "graphpe/alloc_tracker.hpp"
#include "graphpe/error.hpp"

namespace graphpe {
namespace {

struct RepResult {
  double seconds = 0.0;
  std::size_t peak = 0;
  std::size_t failures = 0;
  std::uint64_t checksum = 0;
};

RepResult run_rep(std::span<const Graph> dataset, const PEConfig& cfg,
                  std::size_t jobs) {
  std::vector<std::optional<PEOutput>> outputs(dataset.size());
  std::atomic<std::size_t> failures{0};
  const std::size_t baseline = alloc::current_bytes();
  alloc::reset_peak();
  const auto start = std::chrono::steady_clock::now();

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < dataset.size(); i += stride) {
      try {
        outputs[i] = compute_pe(dataset[i], cfg);
      } catch (const Error&) {
        failures.fetch_add(1, std::memory_order_relaxed);
      }
    }
  };
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) workers.emplace_back(work, w, jobs);
    for (auto& t : workers) t.join();
  }

  const auto stop = std::chrono::steady_clock::now();
  RepResult r;
  r.seconds = std::chrono::duration<double>(stop - start).count();
  const std::size_t peak = alloc::peak_bytes();
  r.peak = peak > baseline ? peak - baseline : 0;
  r.failures = failures.load();
  std::vector<PEOutput> kept;
  for (auto& o : outputs) {
    if (o) kept.push_back(std::move(*o));
  }
  r.checksum = pe_checksum(kept);
  return r;
}

std::string fingerprint(std::size_t jobs) {
  std::string out = "memory=operator-new high-water mark; jobs=" + std::to_string(jobs);
  out += "; hw_threads=" + std::to_string(std::thread::hardware_concurrency());
#ifdef __VERSION__
  out += "; compiler=" __VERSION__;
#endif
  return out;
}

}  // namespace

std::uint64_t pe_checksum(std::span<const PEOutput> outputs) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t bits) {
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffULL;
      h *= 1099511628211ULL;
    }
  };
  for (const PEOutput& o : outputs) {
    mix(o.node_pe.rows());
    mix(o.node_pe.cols());
    for (double x : o.node_pe.data()) mix(std::bit_cast<std::uint64_t>(x));
    if (o.pair_pe) {
      for (double x : o.pair_pe->data()) mix(std::bit_cast<std::uint64_t>(x));
    }
  }
  return h;
}

ProfileRecord profile_pe(std::span<const Graph> dataset, const PEConfig& cfg,
                         std::size_t reps, const ProfileOptions& options) {
  if (reps == 0) fail(Errc::kConfigError, "profile_pe: reps must be at least 1");
  cfg.validate();
  ProfileRecord record;
  record.pe_kind = cfg.kind;
  record.dataset_id = options.dataset_id;
  record.graphs = dataset.size();
  record.params = cfg;
  record.host_fingerprint = fingerprint(std::max<std::size_t>(options.jobs, 1));

  std::vector<double> times;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    const RepResult r = run_rep(dataset, cfg, options.jobs);
    times.push_back(r.seconds);
    record.peak_bytes = std::max(record.peak_bytes, r.peak);
    if (rep == 0) {
      record.failures = r.failures;
      record.output_checksum = r.checksum;
    }
  }
  std::ranges::sort(times);
  const std::size_t mid = times.size() / 2;
  record.total_seconds =
      times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
  if (dataset.empty()) record.total_seconds = 0.0;
  return record;
}

std::string format_real(double x) {
  char buf[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  std::string s = buf;
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string emit_profile_table(std::span<const ProfileRecord> records) {
  std::vector<const ProfileRecord*> sorted;
  for (const auto& r : records) sorted.push_back(&r);
  std::ranges::sort(sorted, [](const ProfileRecord* a, const ProfileRecord* b) {
    const std::string_view pa = pe_kind_name(a->pe_kind);
    const std::string_view pb = pe_kind_name(b->pe_kind);
    return std::tie(a->dataset_id, pa) < std::tie(b->dataset_id, pb);
  });
  std::string out = "pe,dataset,graphs,seconds,peak_mb\n";
  for (const ProfileRecord* r : sorted) {
    out += std::string(pe_kind_name(r->pe_kind)) + "," + r->dataset_id + "," +
           std::to_string(r->graphs) + "," + format_real(r->total_seconds) + "," +
           format_real(static_cast<double>(r->peak_bytes) / 1048576.0) + "\n";
  }
  return out;
}

}  // namespace graphpe

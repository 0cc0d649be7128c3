#include "driver.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "orbitlab/error.hpp"
#include "orbitlab/gkm.hpp"
#include "orbitlab/hessenberg.hpp"
#include "orbitlab/orbitspace.hpp"
#include "orbitlab/permutohedron.hpp"

namespace orbitlab::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedProfile:
    case ErrorCode::UnsupportedComplexity:
    case ErrorCode::ReducibleInput:
      return 2;
    default:
      return 1;
  }
}

int report_error(const Error& e, std::ostream& err) {
  err << "error [" << e.code_name() << "]: " << e.what() << "\n";
  return exit_code_for(e.code());
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) out.push_back(token);
  return out;
}

Spectrum parse_lambda(const std::string& csv) {
  std::vector<Rat> values;
  for (const std::string& token : split(csv, ',')) {
    try {
      values.emplace_back(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidSpectrum,
                  "cannot parse eigenvalue '" + token +
                      "' (expected an integer or p/q)");
    }
  }
  return Spectrum(std::move(values));
}

const std::set<std::string>& emit_targets() {
  static const std::set<std::string> targets = {
      "report.txt", "report.json", "gkm.dot",
      "gkm.json",   "nerve.dot",   "polytope.csv"};
  return targets;
}

void write_artifact(const std::string& dir, const std::string& name,
                    const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path path = fs::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out)
    throw Error(ErrorCode::InvalidArgument,
                "cannot write " + path.string());
}

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  auto parse_int = [&](const std::string& part) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty())
      throw Error(ErrorCode::InvalidArgument,
                  "cannot parse range '" + text + "' (expected e.g. 4..7)");
    return value;
  };
  Range r;
  size_t sep = text.find("..");
  if (sep == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, sep));
    r.hi = parse_int(text.substr(sep + 2));
  }
  if (r.lo > r.hi)
    throw Error(ErrorCode::InvalidArgument,
                "empty range " + std::to_string(r.lo) + ".." +
                    std::to_string(r.hi));
  return r;
}

size_t worker_count(size_t jobs) {
  size_t cap = std::thread::hardware_concurrency();
  if (cap == 0) cap = 1;
  if (const char* env = std::getenv("ORBITLAB_THREADS")) {
    try {
      long parsed = std::stol(env);
      if (parsed >= 1) cap = static_cast<size_t>(parsed);
    } catch (const std::exception&) {
      // Unparseable cap: keep the hardware default.
    }
  }
  return std::min(cap, std::max<size_t>(jobs, 1));
}

std::string batch_row(const HFun& h) {
  auto start = std::chrono::steady_clock::now();
  OrbitReport report = orbit_space_report(h, Spectrum::standard(h.n));
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();

  std::map<int, int> per_color;
  for (const auto& f : report.special) ++per_color[f.color()];

  std::ostringstream row;
  row << h.n << ",\"" << to_string(h) << "\"," << report.i0 << ',';
  bool first = true;
  for (const auto& [color, count] : per_color) {
    if (!first) row << ';';
    row << color << ':' << count;
    first = false;
  }
  row << ',' << report.l << ',';
  for (size_t i = 0; i < report.cohomology.size(); ++i) {
    if (i) row << ';';
    row << report.cohomology[i].rank;
  }
  row << ",ok," << ms << "\n";
  return row.str();
}

}  // namespace

int run_analyze(const AnalyzeOptions& options, std::ostream& out,
                std::ostream& err) {
  try {
    for (const std::string& target : options.emit)
      if (!emit_targets().count(target))
        throw Error(ErrorCode::InvalidArgument,
                    "unknown emit target '" + target +
                        "' (expected report.txt, report.json, gkm.dot, "
                        "gkm.json, nerve.dot, polytope.csv)");

    HFun h = hfun_from_csv(options.h_csv);
    Spectrum lambda = options.lambda_csv.empty()
                          ? Spectrum::standard(h.n)
                          : parse_lambda(options.lambda_csv);
    if (lambda.n() != h.n)
      throw Error(ErrorCode::InvalidSpectrum,
                  "spectrum has " + std::to_string(lambda.n()) +
                      " entries, h needs " + std::to_string(h.n));

    OrbitReport report = orbit_space_report(h, lambda);
    out << report_text(report);

    bool want_gkm = false;
    for (const std::string& target : options.emit)
      want_gkm |= target.rfind("gkm", 0) == 0;
    GkmGraph gkm;
    if (want_gkm) gkm = build_gkm(h, lambda);

    for (const std::string& target : options.emit) {
      std::string content;
      if (target == "report.txt") content = report_text(report);
      else if (target == "report.json") content = report_json(report);
      else if (target == "gkm.dot") content = export_dot(gkm);
      else if (target == "gkm.json") content = export_json(gkm);
      else if (target == "nerve.dot") content = nerve_dot(report.cover_nerve);
      else content = vertex_table_csv(h.n, lambda);
      write_artifact(options.out_dir, target, content);
    }
    return 0;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int run_batch(const BatchOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    Range range = parse_range(options.range);
    std::vector<HFun> rows;
    for (int n = std::max(range.lo, 3); n <= range.hi; ++n)
      for (HFun& h : enumerate_complexity_one(n)) rows.push_back(std::move(h));

    out << "n,h,i0,special_facets_by_color,l,cohomology_ranks,status,"
           "runtime_ms\n";

    std::vector<std::string> results(rows.size());
    std::atomic<size_t> cursor{0};
    auto work = [&] {
      for (size_t i = cursor.fetch_add(1); i < rows.size();
           i = cursor.fetch_add(1))
        results[i] = batch_row(rows[i]);
    };
    size_t workers = worker_count(rows.size());
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
      for (std::thread& t : pool) t.join();
    }
    for (const std::string& row : results) out << row;
    return 0;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

}  // namespace orbitlab::cli

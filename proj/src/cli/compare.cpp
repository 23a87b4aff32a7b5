#include "tridinv/cli/compare.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace tridinv::cli {

namespace {

using json = nlohmann::json;

// JSON has no infinity; non-finite values are written as strings.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json norms(const NormSet& s) {
  return json{{"one", number(s.one)},
              {"inf", number(s.inf)},
              {"frobenius", number(s.frobenius)},
              {"two", number(s.two)}};
}

double max_deviation(const DenseMatrix& x, const DenseMatrix& y) {
  double m = 0.0;
  const auto a = x.data();
  const auto b = y.data();
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

CompareReport run_compare(const TridiagonalMatrix& a, const std::string& label,
                          const std::vector<Method>& methods) {
  CompareReport rep;
  rep.matrix = label;
  rep.n = a.n();
  try {
    rep.cond_1 = condition_number(a, CondKind::one);
  } catch (const Error&) {
    rep.cond_1 = kInf;
  }

  std::vector<std::optional<DenseMatrix>> inverses;
  for (Method m : methods) {
    MethodRun run;
    run.method = m;
    OpCounter ops;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      DenseMatrix x = invert(a, m, &ops);
      run.time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
      run.residuals = residual_report(a, x, to_string(m));
      inverses.emplace_back(std::move(x));
    } catch (const Error& e) {
      run.time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
      run.status = e.status();
      run.error = e.what();
      inverses.emplace_back(std::nullopt);
    }
    run.ops = ops.flops;
    rep.runs.push_back(std::move(run));
  }

  const std::size_t k = methods.size();
  rep.agreement.assign(k, std::vector<std::optional<double>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      if (!inverses[i] || !inverses[j]) continue;
      const double d = i == j ? 0.0 : max_deviation(*inverses[i], *inverses[j]);
      rep.agreement[i][j] = d;
      rep.agreement[j][i] = d;
    }
  }
  return rep;
}

std::string to_json(const CompareReport& r) {
  json methods = json::array();
  for (const MethodRun& run : r.runs) {
    json m{{"name", to_string(run.method)},
           {"status", to_string(run.status)},
           {"cond1", number(r.cond_1)},
           {"ops", run.ops},
           {"time_ns", run.time_ns}};
    if (run.residuals) {
      m["residuals"] = json{{"right", norms(run.residuals->right)},
                            {"left", norms(run.residuals->left)}};
    } else {
      m["residuals"] = nullptr;
      m["error"] = run.error;
    }
    methods.push_back(std::move(m));
  }
  json agreement = json::object();
  for (std::size_t i = 0; i < r.runs.size(); ++i) {
    json row = json::object();
    for (std::size_t j = 0; j < r.runs.size(); ++j) {
      const auto& v = r.agreement[i][j];
      row[to_string(r.runs[j].method)] = v ? number(*v) : json(nullptr);
    }
    agreement[to_string(r.runs[i].method)] = std::move(row);
  }
  json doc{{"matrix", r.matrix},
           {"n", r.n},
           {"methods", std::move(methods)},
           {"agreement", std::move(agreement)}};
  return doc.dump(2);
}

std::string to_text(const CompareReport& r) {
  std::ostringstream os;
  os << "matrix: " << r.matrix << "  (n = " << r.n << ", cond1 = " << sci(r.cond_1)
     << ")\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-13s %-15s %-11s %-11s %-11s %-11s %12s %12s\n",
                "method", "status", "right_2", "left_2", "right_1", "left_1",
                "ops", "time_us");
  os << line;
  for (const MethodRun& run : r.runs) {
    if (run.residuals) {
      const auto& res = *run.residuals;
      std::snprintf(line, sizeof line,
                    "%-13s %-15s %-11s %-11s %-11s %-11s %12llu %12.1f\n",
                    to_string(run.method), to_string(run.status),
                    sci(res.right.two).c_str(), sci(res.left.two).c_str(),
                    sci(res.right.one).c_str(), sci(res.left.one).c_str(),
                    static_cast<unsigned long long>(run.ops),
                    static_cast<double>(run.time_ns) / 1e3);
      os << line;
    } else {
      std::snprintf(line, sizeof line, "%-13s %-15s %s\n", to_string(run.method),
                    to_string(run.status), run.error.c_str());
      os << line;
    }
  }
  os << "\nmax entrywise deviation\n";
  std::snprintf(line, sizeof line, "%-13s", "");
  os << line;
  for (const auto& run : r.runs) {
    std::snprintf(line, sizeof line, " %12s", to_string(run.method));
    os << line;
  }
  os << '\n';
  for (std::size_t i = 0; i < r.runs.size(); ++i) {
    std::snprintf(line, sizeof line, "%-13s", to_string(r.runs[i].method));
    os << line;
    for (std::size_t j = 0; j < r.runs.size(); ++j) {
      const auto& v = r.agreement[i][j];
      std::snprintf(line, sizeof line, " %12s", v ? sci(*v).c_str() : "-");
      os << line;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace tridinv::cli

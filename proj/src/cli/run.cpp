#include "charp/cli.hpp"

#include "charp/cache.hpp"
#include "charp/groebner.hpp"
#include "charp/lucas.hpp"
#include "charp/parser.hpp"
#include "charp/resource.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <iostream>
#include <mutex>
#include <thread>

namespace charp::cli {

namespace {

Integer parse_integer(const std::string& text, const char* what) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0)
    fail(ErrorCode::InvalidArgument, std::string(what) + " must be an integer, got '" + text + "'");
  return v;
}

unsigned exponent_or(const JobSpec& job, unsigned fallback) { return job.e.value_or(fallback); }

std::string cache_key(const JobSpec& job, const Ring& ring) {
  std::string key = to_string(job.command);
  switch (job.command) {
    case Command::Root:
      return key + "|m=" + *job.m + "|e=" + std::to_string(exponent_or(job, 1));
    case Command::Tau: {
      Rational lam = job.lambda ? Rational::parse(*job.lambda)
                                : Rational(parse_integer(*job.m, "-m"), ipow(ring.p(), exponent_or(job, 1)));
      return key + "|lambda=" + lam.fraction() + "|depth=" + std::to_string(job.depth);
    }
    case Command::Fpt:
      return key + "|e=" + std::to_string(exponent_or(job, 3)) + "|s=" + std::to_string(job.s_max);
    case Command::Jumps:
      return key + "|e=" + std::to_string(job.resolution_e) + "|s=" + std::to_string(job.s_max);
    case Command::Hsl:
      return key + "|depth=" + std::to_string(job.depth);
    default:
      fail(ErrorCode::InvalidArgument, "command has no cached form");
  }
}

Json evaluate(const JobSpec& job, const Ring& ring, const Polynomial& f) {
  Json out;
  switch (job.command) {
    case Command::Root: {
      Integer m = parse_integer(*job.m, "-m");
      if (m < 0) fail(ErrorCode::InvalidArgument, "-m must be >= 0");
      out["ideal"] = to_json(mixed_root(f, m, Ideal::unit(ring), exponent_or(job, 1)));
      return out;
    }
    case Command::Tau: {
      TestIdeals T(f);
      Rational lam = job.lambda ? Rational::parse(*job.lambda)
                                : Rational(parse_integer(*job.m, "-m"), ipow(ring.p(), exponent_or(job, 1)));
      out["lambda"] = to_json(lam);
      out["tau"] = to_json(T.tau(lam));
      return out;
    }
    case Command::Fpt:
      return to_json(TestIdeals(f).fpt(exponent_or(job, 3), job.s_max));
    case Command::Jumps:
      out["jumps"] = to_json(TestIdeals(f).jumps_in_unit_interval(job.resolution_e, job.s_max));
      return out;
    case Command::Hsl:
      return to_json(hsl_number(f, job.depth));
    default:
      fail(ErrorCode::InvalidArgument, "not a single-polynomial command");
  }
}

Json root_of_list(const JobSpec& job) {
  Ring ring = make_ring(parse_integer(job.prime, "--prime"), job.vars, parse_order(job.order));
  Json out;
  out["ideal"] = to_json(frob_root(Ideal(ring, parse_poly_list(ring, job.poly)), exponent_or(job, 1)));
  return out;
}

Json lucas_report(const JobSpec& job) {
  Integer p = parse_integer(job.prime, "--prime");
  if (!is_prime(p)) fail(ErrorCode::NotPrime, p.get_str() + " is not prime");
  if (!fits_u64(p)) throw ResourceLimit("prime does not fit in 64 bits");
  const std::uint64_t q = to_u64(p);
  Integer m = parse_integer(*job.m, "-m");
  Json out;
  out["p"] = q;
  out["m"] = m.get_str();
  auto digits = [&](const Integer& v) {
    Json d = Json::array();
    for (auto x : digits_base_p(v, q).digits) d.push_back(x);
    return d;
  };
  out["digitsM"] = digits(m);
  if (!job.parts.empty()) {
    std::vector<Integer> parts;
    Json jp = Json::array();
    for (const auto& s : job.parts) {
      parts.push_back(parse_integer(s, "--parts"));
      jp.push_back(parts.back().get_str());
    }
    out["parts"] = std::move(jp);
    out["residue"] = multinomial_mod_p(m, parts, q);
    out["nonzero"] = multinomial_nonzero(m, parts, q);
    return out;
  }
  Integer k = parse_integer(*job.k, "-k");
  out["k"] = k.get_str();
  out["digitsK"] = digits(k);
  out["residue"] = binom_mod_p(m, k, q);
  out["nonzero"] = binom_nonzero(m, k, q);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string interval_text(const Json& r) {
  return "(" + r["lo"].get<std::string>() + ", " + r["hi"].get<std::string>() + "]";
}

/// Display form of a "num/den" wire string: integers lose the "/1".
std::string shown(const Json& wire) { return rational_from_json(wire).str(); }

void emit(const JobSpec& job, const Json& r, std::ostream& out) {
  if (job.format == Format::Json) {
    out << r.dump() << '\n';
    return;
  }
  const bool csv = job.format == Format::Csv;
  switch (job.command) {
    case Command::Root:
    case Command::Tau:
      if (csv) out << "ideal\n" << csv_field(ideal_text(r.contains("tau") ? r["tau"] : r["ideal"])) << '\n';
      else out << ideal_text(r.contains("tau") ? r["tau"] : r["ideal"]) << '\n';
      return;
    case Command::Fpt:
      if (csv) {
        out << "fpt,certified,lo,hi\n"
            << (r["certified"].get<bool>() ? shown(r["fpt"]) : "") << ','
            << (r["certified"].get<bool>() ? "true" : "false") << ',' << shown(r["lo"]) << ','
            << shown(r["hi"]) << '\n';
      } else if (r["certified"].get<bool>()) {
        out << shown(r["fpt"]) << " certified\n";
      } else {
        out << interval_text(r) << " uncertified\n";
      }
      return;
    case Command::Jumps:
      if (csv) out << "value,status,tau_at,tau_left\n";
      for (const auto& c : r["jumps"]) {
        if (csv) {
          out << shown(c["value"]) << ',' << c["status"].get<std::string>() << ','
              << csv_field(ideal_text(c["tauAt"])) << ',' << csv_field(ideal_text(c["tauLeft"])) << '\n';
          continue;
        }
        out << shown(c["value"]) << ' ' << c["status"].get<std::string>();
        if (c.contains("cellLo")) out << " in (" << shown(c["cellLo"]) << ", " << shown(c["value"]) << ')';
        out << ' ' << ideal_text(c["tauAt"]) << '\n';
      }
      return;
    case Command::Hsl:
      if (csv) out << "hsl\n";
      out << r["hsl"].get<unsigned>() << '\n';
      return;
    case Command::Lucas:
      if (csv) {
        out << "p,m,k,residue,nonzero\n"
            << r["p"].get<std::uint64_t>() << ',' << r["m"].get<std::string>() << ','
            << (r.contains("k") ? r["k"].get<std::string>() : "") << ',' << r["residue"].get<std::uint64_t>()
            << ',' << (r["nonzero"].get<bool>() ? "true" : "false") << '\n';
      } else {
        out << r["residue"].get<std::uint64_t>() << '\n';
      }
      return;
    case Command::Scan:
      break;
  }
}

void report_error(Format format, ErrorCode code, const std::string& message, std::ostream& out,
                  std::ostream& err) {
  err << "charp: " << to_string(code) << ": " << message << '\n';
  if (format == Format::Json) out << error_json(code, message).dump() << '\n';
}

// scan ---------------------------------------------------------------------

struct Record {
  std::string invariant;
  std::string value;
  std::string status;
  long long wall_ms = 0;
  std::optional<ErrorCode> failure;
};

std::vector<std::uint64_t> primes_in(const std::string& range) {
  auto dots = range.find("..");
  if (dots == std::string::npos) fail(ErrorCode::InvalidArgument, "--primes must look like lo..hi");
  Integer lo = parse_integer(range.substr(0, dots), "--primes");
  Integer hi = parse_integer(range.substr(dots + 2), "--primes");
  std::vector<std::uint64_t> out;
  if (lo > hi) return out;
  if (!fits_u64(hi)) throw ResourceLimit("--primes upper bound does not fit in 64 bits");
  if (lo < 2) lo = 2;
  for (Integer v = lo; v <= hi; ++v)
    if (is_prime(v)) out.push_back(to_u64(v));
  return out;
}

std::string summarize(const std::string& invariant, const Json& r, std::string& status) {
  if (invariant == "fpt") {
    const bool ok = r["certified"].get<bool>();
    status = ok ? "certified" : "uncertified";
    return ok ? shown(r["fpt"]) : interval_text(r);
  }
  if (invariant == "hsl") {
    status = "ok";
    return std::to_string(r["hsl"].get<unsigned>());
  }
  if (invariant == "jumps") {
    std::string v;
    status = "certified";
    for (const auto& c : r["jumps"]) {
      if (!v.empty()) v += ' ';
      v += shown(c["value"]);
      if (c["status"] != "certified-jump") status = "partial";
    }
    return v;
  }
  status = "ok";
  return ideal_text(r["tau"]);
}

std::vector<Record> scan_prime(const JobSpec& job, std::uint64_t p) {
  std::vector<Record> records;
  std::optional<ScopedDeadline> deadline;
  if (job.timeout_secs > 0)
    deadline.emplace(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(job.timeout_secs)));
  for (const auto& inv : job.report) {
    Record rec{inv, "", "", 0, std::nullopt};
    auto t0 = std::chrono::steady_clock::now();
    try {
      JobSpec sub = job;
      sub.prime = std::to_string(p);
      sub.command = inv == "fpt" ? Command::Fpt : inv == "hsl" ? Command::Hsl : inv == "jumps" ? Command::Jumps
                                                                                                 : Command::Tau;
      rec.value = summarize(inv, compute(sub), rec.status);
    } catch (const Error& e) {
      rec.failure = e.code();
      const std::string what = e.what();
      rec.status = e.code() == ErrorCode::ResourceLimit
                       ? (what.rfind("timeout", 0) == 0 ? "timeout" : "resource-limit")
                       : "error";
      rec.value = to_string(e.code());
    } catch (const std::exception& e) {
      rec.failure = ErrorCode::InvariantViolation;
      rec.status = "error";
      rec.value = to_string(ErrorCode::InvariantViolation);
    }
    if (job.timing)
      rec.wall_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    records.push_back(std::move(rec));
  }
  return records;
}

int run_scan(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const auto primes = primes_in(job.primes);
  if (primes.empty()) return kExitOk;

  std::vector<std::vector<Record>> results(primes.size());
  std::vector<bool> done(primes.size(), false);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};

  unsigned nthreads = job.threads ? job.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, primes.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < primes.size();) {
        auto recs = scan_prime(job, primes[i]);
        std::lock_guard lock(mu);
        results[i] = std::move(recs);
        done[i] = true;
        cv.notify_all();
      }
    });
  }

  const bool json = job.format == Format::Json;
  if (!json) out << "prime,invariant,value,status,wall_ms\n";
  std::size_t failed_primes = 0;
  std::optional<ErrorCode> first_failure;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::vector<Record> recs;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done[i]; });
      recs = std::move(results[i]);
    }
    bool all_failed = !recs.empty();
    for (const auto& r : recs) {
      if (r.failure) {
        err << "charp: p=" << primes[i] << ' ' << r.invariant << ": " << r.status << " (" << r.value << ")\n";
        if (!first_failure) first_failure = r.failure;
      } else {
        all_failed = false;
      }
      if (json) {
        Json j;
        j["prime"] = primes[i];
        j["invariant"] = r.invariant;
        j["value"] = r.value;
        j["status"] = r.status;
        j["wallMs"] = r.wall_ms;
        out << j.dump() << '\n';
      } else {
        out << primes[i] << ',' << r.invariant << ',' << csv_field(r.value) << ',' << r.status << ','
            << r.wall_ms << '\n';
      }
    }
    if (all_failed) ++failed_primes;
    out.flush();
  }
  if (failed_primes == primes.size() && first_failure) return exit_code_for(*first_failure);
  return kExitOk;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  fail(ErrorCode::InvalidArgument, "unknown format '" + s + "'");
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::Root: return "root";
    case Command::Tau: return "tau";
    case Command::Fpt: return "fpt";
    case Command::Jumps: return "jumps";
    case Command::Hsl: return "hsl";
    case Command::Lucas: return "lucas";
    case Command::Scan: return "scan";
  }
  return "?";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ResourceLimit: return kExitResource;
    case ErrorCode::InvariantViolation: return kExitInternal;
    default: return kExitUsage;
  }
}

std::optional<JobSpec> parse_args(int argc, const char* const* argv, std::ostream& out) {
  JobSpec job;
  std::string format = "text";
  CLI::App app{"Test ideals, F-thresholds and HSL numbers of hypersurfaces over F_p", "charp"};
  app.require_subcommand(1);

  auto ring_opts = [&](CLI::App* sub) {
    sub->add_option("-p,--prime", job.prime, "characteristic")->required();
    sub->add_option("--vars", job.vars, "variable names, comma separated")->delimiter(',')->required();
    sub->add_option("-f,--poly", job.poly, "polynomial")->required();
    sub->add_option("--order", job.order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--cache-dir", job.cache_dir, "result cache directory")->envname("CHARP_CACHE_DIR");
    sub->add_option("--timeout-secs", job.timeout_secs, "wall-clock budget (per prime for scan)");
    sub->add_option("--depth", job.depth, "bound on chain lengths")->check(CLI::PositiveNumber);
  };

  struct Sub {
    Command c;
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {Command::Root, "root", "Frobenius root (f^m)^[1/p^e], or of a generator list"},
      {Command::Tau, "tau", "test ideal tau(f^lambda)"},
      {Command::Fpt, "fpt", "F-pure threshold"},
      {Command::Jumps, "jumps", "F-jumping numbers in (0, 1)"},
      {Command::Hsl, "hsl", "HSL number"},
      {Command::Lucas, "lucas", "binomial and multinomial residues mod p"},
      {Command::Scan, "scan", "invariants across a prime range"},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&job, c = s.c] { job.command = c; });
    common(sub);
    switch (s.c) {
      case Command::Root:
        ring_opts(sub);
        sub->add_option("-m", job.m, "power of f (requires a single polynomial)");
        sub->add_option("-e", job.e, "root exponent, default 1");
        break;
      case Command::Tau:
        ring_opts(sub);
        sub->add_option("--lambda", job.lambda, "exponent as num/den");
        sub->add_option("-m", job.m, "numerator, with lambda = m/p^e");
        sub->add_option("-e", job.e, "exponent of p in the denominator, default 1");
        break;
      case Command::Fpt:
        ring_opts(sub);
        sub->add_option("-e", job.e, "largest e for nu(p^e), default 3");
        sub->add_option("--s-max", job.s_max, "largest period in candidate denominators");
        break;
      case Command::Jumps:
        ring_opts(sub);
        sub->add_option("--resolution-e", job.resolution_e, "grid m/p^e used to localize jumps");
        sub->add_option("--s-max", job.s_max, "largest period in candidate denominators");
        break;
      case Command::Hsl:
        ring_opts(sub);
        break;
      case Command::Lucas:
        sub->add_option("-p,--prime", job.prime, "prime")->required();
        sub->add_option("-m", job.m, "top argument")->required();
        sub->add_option("-k", job.k, "bottom argument of the binomial");
        sub->add_option("--parts", job.parts, "multinomial parts, comma separated")->delimiter(',');
        break;
      case Command::Scan:
        sub->add_option("--vars", job.vars, "variable names, comma separated")->delimiter(',')->required();
        sub->add_option("-f,--poly", job.poly, "polynomial with integer coefficients")->required();
        sub->add_option("--order", job.order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
        sub->add_option("--primes", job.primes, "prime range lo..hi")->required();
        sub->add_option("--report", job.report, "fpt, hsl, jumps, tau (comma separated)")->delimiter(',');
        sub->add_option("--lambda", job.lambda, "exponent for the tau report");
        sub->add_option("-e", job.e, "largest e for fpt");
        sub->add_option("--resolution-e", job.resolution_e, "grid used for jumps");
        sub->add_option("--s-max", job.s_max, "largest period in candidate denominators");
        sub->add_option("--threads", job.threads, "worker count, 0 for all cores");
        sub->add_flag("!--no-timing", job.timing, "report wall_ms as 0 for reproducible output");
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    fail(ErrorCode::InvalidArgument, e.what());
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub->get_help_ptr() && sub->get_help_ptr()->count()) {
      out << sub->help();
      return std::nullopt;
    }
  }
  job.format = parse_format(format);
  return job;
}

void validate(const JobSpec& job) {
  if (job.depth == 0) fail(ErrorCode::InvalidArgument, "--depth must be >= 1");
  switch (job.command) {
    case Command::Tau:
      if (job.lambda.has_value() == job.m.has_value())
        fail(ErrorCode::InvalidArgument, "tau needs exactly one of --lambda or -m");
      if (job.lambda) Rational::parse(*job.lambda);
      break;
    case Command::Lucas:
      if (job.k.has_value() == !job.parts.empty())
        fail(ErrorCode::InvalidArgument, "lucas needs exactly one of -k or --parts");
      break;
    case Command::Scan:
      if (job.report.empty()) fail(ErrorCode::InvalidArgument, "--report is empty");
      for (const auto& r : job.report) {
        if (r != "fpt" && r != "hsl" && r != "jumps" && r != "tau")
          fail(ErrorCode::InvalidArgument, "unknown report '" + r + "'");
        if (r == "tau" && !job.lambda) fail(ErrorCode::InvalidArgument, "the tau report needs --lambda");
      }
      if (job.lambda) Rational::parse(*job.lambda);
      break;
    default:
      break;
  }
}

Json compute(const JobSpec& job) {
  if (job.command == Command::Root && !job.m) return root_of_list(job);
  Ring ring = make_ring(parse_integer(job.prime, "--prime"), job.vars, parse_order(job.order));
  Polynomial f = parse_poly(ring, job.poly);
  if (!job.cache_dir || job.cache_dir->empty()) return evaluate(job, ring, f);

  ResultCache cache(*job.cache_dir);
  const std::string key = cache_key(job, ring);
  if (auto hit = cache.lookup(ring, f, key)) {
    if (audit_selected(cache.file_for(ring, f).filename().string(), key)) {
      if (!reports_agree(ring, *hit, evaluate(job, ring, f)))
        fail(ErrorCode::InvariantViolation, "cache audit failed for " + key + " in " + cache.file_for(ring, f).string());
    }
    return *hit;
  }
  Json fresh = evaluate(job, ring, f);
  cache.store(ring, f, key, fresh);
  return fresh;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    validate(job);
    limits().chain_bound = job.depth;
    if (job.command == Command::Scan) return run_scan(job, out, err);
    std::optional<ScopedDeadline> deadline;
    if (job.timeout_secs > 0)
      deadline.emplace(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(job.timeout_secs)));
    Json report = job.command == Command::Lucas ? lucas_report(job) : compute(job);
    emit(job, report, out);
    return kExitOk;
  } catch (const Error& e) {
    report_error(job.format, e.code(), e.what(), out, err);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report_error(job.format, ErrorCode::InvariantViolation, e.what(), out, err);
    return kExitInternal;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<JobSpec> job;
  try {
    job = parse_args(argc, argv, out);
  } catch (const Error& e) {
    // the format flag may itself be what failed; honour it if it was readable
    Format format = Format::Text;
    for (int i = 1; i + 1 < argc; ++i)
      if (std::string(argv[i]) == "--format" && std::string(argv[i + 1]) == "json") format = Format::Json;
    report_error(format, e.code(), e.what(), out, err);
    return exit_code_for(e.code());
  }
  if (!job) return kExitOk;
  return run(*job, out, err);
}

}  // namespace charp::cli

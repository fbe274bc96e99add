#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flatlab/correlate.hpp"
#include "flatlab/errors.hpp"
#include "flatlab/parallel.hpp"
#include "flatlab/polyfam.hpp"
#include "flatlab/serialize.hpp"
#include "flatlab/seqgen.hpp"
#include "flatlab/specnorm.hpp"
#include "flatlab/verify.hpp"

using namespace flatlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
  std::optional<double> tolerance;
  std::optional<std::size_t> grid_cap;
};

// Polynomial selection shared by poly, norms and scan.
struct PolyArgs {
  std::string family;
  unsigned stage = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t p = 0;
  std::int64_t t = 0;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + g.out);
  f << text;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// "rs" and "rs-Q" are shorthand for the Rudin-Shapiro pair members.
AnalyticPolynomial build_poly(const std::string& family, unsigned stage, std::size_t n,
                              std::size_t m, std::uint64_t p, std::int64_t t) {
  if (family == "rs" || family == "rudin-shapiro-P") return rudin_shapiro_pair(stage).first;
  if (family == "rs-Q" || family == "rudin-shapiro-Q") return rudin_shapiro_pair(stage).second;
  if (family == "truncated-rs") return truncated_rs(n);
  if (family == "rs-segment") return rs_segment(n, m);
  if (family == "fekete") return fekete(p);
  if (family == "fekete-modified") return fekete_modified(p);
  if (family == "fekete-shifted") return fekete_shifted(p, t);
  if (family == "singer") return singer_poly(p);
  throw UsageError("unknown family '" + family + "'");
}

bool stage_family(const std::string& family) {
  return family == "rs" || family == "rs-Q" || family == "rudin-shapiro-P" ||
         family == "rudin-shapiro-Q";
}

std::int64_t scan_parameter(const std::string& family, unsigned stage, std::size_t n,
                            std::uint64_t p) {
  if (stage_family(family)) return stage;
  if (family == "truncated-rs" || family == "rs-segment") return static_cast<std::int64_t>(n);
  return static_cast<std::int64_t>(p);
}

double parse_alpha(const std::string& s) {
  if (s == "inf" || s == "infinity") return kInfinity;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("bad alpha '" + s + "'");
  }
  if (used != s.size() || !(v >= 0.0)) throw UsageError("bad alpha '" + s + "'");
  return v;
}

NormOptions norm_options(const Globals& g) {
  NormOptions o;
  if (g.tolerance) o.tolerance = *g.tolerance;
  if (g.grid_cap) o.grid_cap = *g.grid_cap;
  return o;
}

NormScanRow norm_row(const AnalyticPolynomial& poly, const std::string& family,
                     std::int64_t param, double alpha, const NormOptions& options,
                     std::size_t& warnings) {
  NormScanRow row;
  row.family = family;
  row.stage_or_p = param;
  try {
    if (alpha == 0.0) {
      row.profile = mahler_measure(poly, options);
      row.status = "offset-grid";
    } else {
      row.profile = lp_norm(poly, alpha, options);
    }
  } catch (const AccuracyNotReached& e) {
    row.profile = e.best();
    row.status = "accuracy-not-reached";
    ++warnings;
  }
  return row;
}

std::string norm_rows(const Globals& g, const std::vector<NormScanRow>& rows) {
  return g.format == "json" ? norm_scan_json(rows) : norm_scan_csv(rows);
}

void add_poly_options(CLI::App* cmd, PolyArgs& a) {
  cmd->add_option("--family", a.family,
                  "rs | rs-Q | truncated-rs | rs-segment | fekete | fekete-modified | "
                  "fekete-shifted | singer")
      ->required();
  cmd->add_option("--stage", a.stage, "stage n of the Rudin-Shapiro pair");
  cmd->add_option("--N", a.n, "N for truncated-rs and rs-segment");
  cmd->add_option("--M", a.m, "segment length M for rs-segment");
  cmd->add_option("--p", a.p, "prime p for the Fekete and Singer families");
  cmd->add_option("--t", a.t, "shift t for fekete-shifted");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flatlab: Rudin-Shapiro, Fekete and Singer polynomial norms and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "cap on worker threads (0 = all cores)");
  app.add_option("--tolerance", g.tolerance, "relative tolerance of grid refinement");

  // seq
  auto* seq = app.add_subcommand("seq", "Generate a sign sequence.");
  seq->footer("Statements: eq-para, prop-ms-correlations, gauss-formula, singer-open");
  std::string seq_source;
  std::size_t seq_count = 0;
  std::uint64_t seq_p = 0;
  std::int64_t seq_shift = 0;
  seq->add_option("--source", seq_source,
                  "grs-recurrence | grs-binary | grs-substitution | grs-words | legendre | "
                  "fekete-shifted | singer")
      ->required();
  auto* count_opt = seq->add_option("--count", seq_count, "number of terms (GRS sources)");
  seq->add_option("--p", seq_p, "prime for legendre, fekete-shifted and singer");
  seq->add_option("--shift", seq_shift, "shift for fekete-shifted");

  // poly
  auto* poly = app.add_subcommand("poly", "Emit polynomial coefficients.");
  poly->footer("Statements: eq-para, eq-conjugate, lemma-segment-sqrtM, self-reciprocal");
  PolyArgs poly_args;
  add_poly_options(poly, poly_args);

  // norms
  auto* norms = app.add_subcommand("norms", "L^alpha norms of one polynomial.");
  norms->footer(
      "alpha 0 is the Mahler measure (offset grid), alpha inf the sup norm.\n"
      "Statements: lemma-norm-equiv, thm-main-nonflat, prop-flatness-char, prop-19-18, "
      "eq-supbound");
  PolyArgs norm_args;
  std::vector<std::string> norm_alphas;
  add_poly_options(norms, norm_args);
  norms->add_option("--alpha", norm_alphas, "one or more exponents")->required()->delimiter(',');
  norms->add_option("--grid-cap", g.grid_cap, "largest quadrature grid (default 2^26)");

  // scan
  auto* scan = app.add_subcommand("scan", "Norm scan over a range of stages or primes.");
  scan->footer("Statements: thm-main-nonflat, lemma-norm-equiv, hoholdt-jensen-trend");
  std::string scan_family;
  unsigned scan_from = 0;
  unsigned scan_to = 0;
  std::vector<std::uint64_t> scan_values;
  std::vector<std::string> scan_alphas;
  scan->add_option("--family", scan_family, "family label as for norms")->required();
  scan->add_option("--from", scan_from, "first stage (rs families)");
  scan->add_option("--to", scan_to, "last stage (rs families)");
  scan->add_option("--values", scan_values, "N or p values (other families)")->delimiter(',');
  scan->add_option("--alpha", scan_alphas, "exponents")->required()->delimiter(',');
  scan->add_option("--grid-cap", g.grid_cap, "largest quadrature grid (default 2^26)");

  // correlate
  auto* corr = app.add_subcommand("correlate", "Aperiodic autocorrelations of a family member.");
  corr->footer("Statements: prop-ms-correlations, thm-l4, hoholdt-jensen-trend");
  std::string corr_family;
  std::uint64_t corr_size = 0;
  corr->add_option("--family", corr_family,
                   "grs | truncated-rs | rudin-shapiro | fekete | fekete-modified | singer")
      ->required();
  corr->add_option("--size", corr_size, "prefix length, N, stage or p")->required();

  // merit
  auto* merit = app.add_subcommand("merit", "Exact merit factor table.");
  merit->footer("Statements: prop-19-18, thm-l4, hoholdt-jensen-trend, newman-byrnes-search");
  std::string merit_family;
  std::vector<std::uint64_t> merit_sizes;
  merit->add_option("--family", merit_family, "family as for correlate")->required();
  merit->add_option("--sizes", merit_sizes, "sizes")->required()->delimiter(',');

  // verify
  auto* verify = app.add_subcommand("verify", "Run the verification suite.");
  std::string all_ids;
  for (auto id : all_statements()) all_ids += std::string(all_ids.empty() ? "" : ", ") +
                                              std::string(to_string(id));
  verify->footer("Statements: " + all_ids);
  bool verify_all = false;
  std::vector<std::string> verify_only;
  std::string verify_scale = "default";
  std::optional<unsigned> verify_max_stage;
  auto* all_flag = verify->add_flag("--all", verify_all, "run every statement");
  auto* only_opt =
      verify->add_option("--only", verify_only, "comma-separated statement ids")->delimiter(',');
  all_flag->excludes(only_opt);
  verify->add_option("--scale", verify_scale, "default | quick")
      ->check(CLI::IsMember({"default", "quick"}));
  verify->add_option("--max-stage", verify_max_stage, "largest stage for thm-l4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    parallel::set_max_threads(g.threads);

    if (*seq) {
      const auto source = parse_sequence_source(seq_source);
      if (!source || *source == SequenceSource::Custom)
        throw UsageError("unknown source '" + seq_source + "'");
      std::optional<SignSequence> s;
      const bool grs = *source == SequenceSource::GrsRecurrence ||
                       *source == SequenceSource::GrsBinary ||
                       *source == SequenceSource::GrsSubstitution ||
                       *source == SequenceSource::GrsWords;
      if (grs) {
        if (count_opt->count() == 0 || seq_count == 0)
          throw UsageError("--count must be at least 1");
        switch (*source) {
          case SequenceSource::GrsRecurrence:
            s = grs_recurrence(seq_count);
            break;
          case SequenceSource::GrsSubstitution:
            s = grs_substitution(seq_count);
            break;
          case SequenceSource::GrsWords: {
            unsigned stage = 0;
            while ((std::size_t{1} << stage) < seq_count) ++stage;
            auto a = grs_words(stage).a;
            a.resize(seq_count);
            s = SignSequence(std::move(a), SequenceSource::GrsWords);
            break;
          }
          default:
            s = grs_binary(seq_count);
        }
      } else if (*source == SequenceSource::Legendre) {
        s = legendre_sequence(seq_p);
      } else if (*source == SequenceSource::FeketeShifted) {
        s = legendre_sequence(seq_p, seq_shift);
      } else {
        s = singer_sign_sequence(seq_p);
      }
      const std::string text = g.format == "json" ? sequence_json(*s) : sequence_csv(*s);
      emit(g, text);
      char line[96];
      std::snprintf(line, sizeof line, "length=%zu checksum=%016llx\n", s->length(),
                    static_cast<unsigned long long>(fnv1a(sequence_csv(*s))));
      std::cerr << line;
      return kExitOk;
    }

    if (*poly) {
      const auto pl = build_poly(poly_args.family, poly_args.stage, poly_args.n, poly_args.m,
                                 poly_args.p, poly_args.t);
      emit(g, g.format == "json" ? polynomial_json(pl) : polynomial_csv(pl));
      return kExitOk;
    }

    if (*norms) {
      const auto pl = build_poly(norm_args.family, norm_args.stage, norm_args.n, norm_args.m,
                                 norm_args.p, norm_args.t);
      const auto param = scan_parameter(norm_args.family, norm_args.stage, norm_args.n,
                                        norm_args.p);
      const auto options = norm_options(g);
      std::vector<NormScanRow> rows;
      std::size_t warnings = 0;
      for (const auto& a : norm_alphas)
        rows.push_back(norm_row(pl, norm_args.family, param, parse_alpha(a), options, warnings));
      emit(g, norm_rows(g, rows));
      if (warnings) std::cerr << "warnings: " << warnings << " accuracy-not-reached\n";
      return kExitOk;
    }

    if (*scan) {
      std::vector<double> alphas;
      for (const auto& a : scan_alphas) alphas.push_back(parse_alpha(a));
      const auto options = norm_options(g);
      std::vector<NormScanRow> rows;
      std::size_t warnings = 0;
      auto run = [&](const AnalyticPolynomial& pl, std::int64_t param) {
        for (double a : alphas) rows.push_back(norm_row(pl, scan_family, param, a, options, warnings));
      };
      if (stage_family(scan_family)) {
        if (scan_to < scan_from) throw UsageError("--to must not be below --from");
        for (unsigned n = scan_from; n <= scan_to; ++n)
          run(build_poly(scan_family, n, 0, 0, 0, 0), n);
      } else {
        if (scan_values.empty()) throw UsageError("--values is required for this family");
        for (auto v : scan_values) {
          const bool by_n = scan_family == "truncated-rs";
          if (!by_n && scan_family == "rs-segment")
            throw UsageError("scan does not support rs-segment");
          run(build_poly(scan_family, 0, v, 0, v, 0), static_cast<std::int64_t>(v));
        }
      }
      emit(g, norm_rows(g, rows));
      if (warnings) std::cerr << "warnings: " << warnings << " accuracy-not-reached\n";
      return kExitOk;
    }

    if (*corr) {
      const auto family = parse_merit_family(corr_family);
      if (!family) throw UsageError("unknown family '" + corr_family + "'");
      const auto profile = autocorrelations(family_sequence(*family, corr_size));
      if (g.format == "json") {
        emit(g, correlation_json(profile));
      } else {
        std::string text = "k,c_k,nu_k\n";
        const auto nu = spectral_coefficients(profile);
        for (std::size_t k = 0; k < profile.length; ++k)
          text += std::to_string(k) + "," + std::to_string(profile.c[k]) + "," +
                  to_string(nu[k]) + "\n";
        emit(g, text);
      }
      return kExitOk;
    }

    if (*merit) {
      const auto family = parse_merit_family(merit_family);
      if (!family) throw UsageError("unknown family '" + merit_family + "'");
      const auto rows = merit_factor_table(*family, merit_sizes);
      emit(g, g.format == "json" ? merit_json(rows) : merit_csv(rows));
      return kExitOk;
    }

    if (*verify) {
      std::set<StatementId> selection;
      if (verify_all) {
        selection.insert(all_statements().begin(), all_statements().end());
      } else {
        if (verify_only.empty()) throw UsageError("verify needs --all or --only");
        for (const auto& label : verify_only) {
          const auto id = parse_statement_id(label);
          if (!id) throw UsageError("unknown statement id '" + label + "'");
          selection.insert(*id);
        }
      }
      auto config = verify_scale == "quick" ? VerifyConfig::quick() : VerifyConfig::standard();
      if (g.tolerance) config.tolerance = *g.tolerance;
      if (verify_max_stage) config.l4_max_stage = *verify_max_stage;
      const auto reports = run_all(config, selection);
      emit(g, verdict_json_lines(reports));
      std::cerr << verdict_summary(reports);
      return all_passed(reports) ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource limit: out of memory\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

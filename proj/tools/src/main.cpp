// deltafn: build caches, run verification suites, print delta of named
// projective modules.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "deltafn/cache.hpp"
#include "deltafn/suites.hpp"
#include "report_format.hpp"

namespace {

using namespace deltafn;

struct Common {
  int p = 2;
  int n = 2;
  int D = -1;
  std::uint64_t seed = 1;
  std::string cache_dir;
  std::string format = "text";
};

std::filesystem::path cache_root(const Common& c) {
  return c.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(c.cache_dir);
}

void check_range(int p, int n) {
  if (p != 2 && p != 3) throw DimensionError("unsupported p = " + std::to_string(p) + " (2 or 3)");
  if (n < 1 || n > 3) throw DimensionError("unsupported n = " + std::to_string(n) + " (1 to 3)");
}

// Load every cached level k <= n; the top level is required when `require`.
void load_levels(Catalog& cat, const Common& c, bool require) {
  const auto root = cache_root(c);
  for (int k = 1; k <= c.n; ++k) {
    const auto st = check_cache(root, c.p, k);
    if (st.state == CacheState::Corrupt) throw CacheError(st.message);
    if (st.state == CacheState::Missing) {
      if (require && k == c.n)
        throw CacheError("no cache for p = " + std::to_string(c.p) + ", n = " + std::to_string(k) + " under " +
                         root.string() + "; run `deltafn build " + std::to_string(c.p) + " " +
                         std::to_string(c.n) + "` first");
      continue;
    }
    load_cache(cat.gl(k, c.p), root);
  }
}

int cmd_build(const Common& c) {
  check_range(c.p, c.n);
  CatalogOptions opt;
  opt.seed = c.seed;
  Catalog cat(opt);
  const auto root = cache_root(c);
  for (int k = 1; k <= c.n; ++k) {
    Context& ctx = cat.gl(k, c.p);
    const auto t0 = std::chrono::steady_clock::now();
    const bool wrote = write_cache(ctx, root);
    if (!wrote) load_cache(ctx, root);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto& reg = ctx.simples();
    std::cout << ctx.label() << ": " << (wrote ? "built" : "up to date") << " (" << secs << " s), " << reg.size()
              << " simples:";
    for (std::size_t i = 0; i < reg.size(); ++i) std::cout << " " << reg.name(i) << "[" << reg.simple(i).dim() << "]";
    if (ctx.has_pims() || ctx.pims_feasible()) {
      auto& pims = ctx.pims();
      std::cout << "; PIMs:";
      for (std::size_t i = 0; i < pims.size(); ++i) std::cout << " " << pims.name(i) << "[" << pims.pim(i).dim() << "]";
    } else {
      std::cout << "; PIMs not built (group order above the regular-module limit)";
    }
    std::cout << "\n";
  }
  std::cout << "cache: " << cache_path(root, c.p, c.n).string() << "\n";
  return 0;
}

int cmd_verify(const Common& c, const std::vector<std::string>& suites) {
  check_range(c.p, c.n);
  CatalogOptions opt;
  opt.seed = c.seed;
  Catalog cat(opt);
  load_levels(cat, c, true);
  const auto fmt = cli::parse_format(c.format);
  std::vector<VerifyReport> all;
  std::vector<std::string> selected = suites;
  if (selected.size() == 1 && selected.front() == "all") selected = suite_names();
  for (const auto& s : selected) {
    auto reps = run_suite(s, cat, {c.p, c.n, c.D});
    all.insert(all.end(), reps.begin(), reps.end());
  }
  cli::write_reports(std::cout, all, fmt);
  bool ok = true;
  for (const auto& r : all) ok = ok && (r.status == Status::Pass || r.status == Status::Skipped);
  if (fmt == cli::Format::Text) {
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : all) {
      if (r.status == Status::Pass) ++pass;
      else if (r.status == Status::Skipped) ++skip;
      else ++fail;
    }
    std::cout << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skipped (seed " << c.seed << ")\n";
  }
  return ok ? 0 : 1;
}

int cmd_delta(const Common& c, const std::string& name) {
  check_range(c.p, c.n);
  if (c.n < 2) throw DimensionError("delta needs n >= 2");
  CatalogOptions opt;
  opt.seed = c.seed;
  Catalog cat(opt);
  load_levels(cat, c, false);
  Context& ctx = cat.gl(c.n, c.p);
  const auto d = delta(ctx.named_module(name), ctx);
  if (cli::parse_format(c.format) == cli::Format::Json) {
    std::cout << nlohmann::json{{"schema", kReportSchema},
                                {"input", name},
                                {"base", ctx.label()},
                                {"input_dim", d.input.dim()},
                                {"output_dim", d.output.dim()},
                                {"expansion", d.expansion}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << d.expansion << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective modules of GL_n(F_p) and M_n(F_p), the functor delta and its graded identities"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub, bool with_pn) {
    if (with_pn) {
      sub->add_option("--p", c.p, "prime (2 or 3)");
      sub->add_option("--n", c.n, "matrix size (1 to 3)");
    }
    sub->add_option("--D", c.D, "degree bound (default 12 at p = 2, 14 at p = 3)");
    sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
    sub->add_option("--cache-dir", c.cache_dir, std::string("cache directory (default $") + kCacheDirEnv + " or ./cache)");
    sub->add_option("--format", c.format, "output format: text, csv or json")->capture_default_str();
  };

  auto* build = app.add_subcommand("build", "build and cache tables, simples and projective covers");
  build->add_option("p", c.p, "prime")->required();
  build->add_option("n", c.n, "matrix size")->required();
  add_common(build, false);

  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite,suite", suites, "suite names or 'all'");
  add_common(verify, true);

  std::string name;
  auto* del = app.add_subcommand("delta", "print the PIM expansion of delta of a named projective");
  del->add_option("module", name, "St, P_triv, P_nat, P_nat#, regular, St*<simple>, P_<simple>")->required();
  add_common(del, true);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*build) return cmd_build(c);
    if (*verify) {
      if (suites.empty()) {
        std::cerr << "verify: name at least one suite:";
        for (const auto& s : suite_names()) std::cerr << " " << s;
        std::cerr << " all\n";
        return 2;
      }
      return cmd_verify(c, suites);
    }
    if (*del) return cmd_delta(c, name);
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

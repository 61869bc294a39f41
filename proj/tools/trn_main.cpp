#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trn/constructions.hpp"
#include "trn/generators.hpp"
#include "trn/path_spectrum.hpp"
#include "trn/tournament.hpp"
#include "trn/verifier.hpp"

namespace {

using nlohmann::json;

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_file);
  if (!os) throw std::runtime_error("cannot open " + out_file);
  os << text;
}

trn::LabeledTournament read_trn(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return trn::parse(ss.str());
}

struct VerifyOptions {
  bool json_out = false;
  std::string out_file;
  int threads = 1;
};

// Emits the record stream (JSON lines) when asked for; otherwise prints only
// problems and a final summary. Exit status ignores expected boundary
// failures, which are marked as sharpness witnesses.
int run_verify(const VerifyOptions& opts,
               const std::function<trn::CampaignSummary(const trn::ReportSink&)>& campaign) {
  std::ofstream file;
  std::ostream* stream = nullptr;
  if (!opts.out_file.empty()) {
    file.open(opts.out_file);
    if (!file) {
      std::cerr << "cannot open " << opts.out_file << "\n";
      return 2;
    }
    stream = &file;
  } else if (opts.json_out) {
    stream = &std::cout;
  }

  if (stream) trn::write_report_header(*stream);
  trn::ReportSink sink = [&](const trn::ReportRecord& rec) {
    if (stream) {
      trn::write_report_record(*stream, rec);
    } else if (rec.verdict == trn::Verdict::fail ||
               rec.verdict == trn::Verdict::precondition_skip) {
      std::cout << trn::verdict_name(rec.verdict) << " " << rec.claim
                << (rec.sharpness ? " [sharpness]" : "") << " "
                << rec.instance.dump() << " " << rec.witness.dump() << "\n";
    }
  };

  trn::CampaignSummary sum = campaign(sink);
  std::cerr << "pass=" << sum.pass << " fail=" << sum.fail
            << " vacuous=" << sum.vacuous << " skipped=" << sum.skipped
            << " sharpness=" << sum.sharpness << "\n";
  return sum.clean() ? 0 : 1;
}

std::string spectrum_human(const trn::PathSpectrum& sp) {
  std::ostringstream os;
  os << "spectrum " << sp.source << " -> " << sp.target << ":";
  for (int k : sp.to_vector()) os << " " << k;
  os << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tournament path-spectrum toolkit"};
  app.require_subcommand(1);

  std::string out_file;
  bool json_out = false;
  int threads = 1;

  int rc = 0;
  try {
    // ---- gen ------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate tournaments");
    gen->require_subcommand(1);

    {
      auto* rot = gen->add_subcommand("rotational", "rotational regular tournament");
      auto n = std::make_shared<int>(3);
      auto out = std::make_shared<std::string>();
      rot->add_option("--n", *n, "half-order (order = 2n+1)")->required();
      rot->add_option("--out", *out, "output file (default stdout)");
      rot->callback([n, out] {
        write_output(trn::serialize(trn::rotational_regular(*n)), *out);
      });
    }
    {
      auto* rr = gen->add_subcommand("random-regular", "sampled regular tournament");
      auto n = std::make_shared<int>(5);
      auto seed = std::make_shared<std::uint64_t>(1);
      auto mix = std::make_shared<int>(-1);
      auto out = std::make_shared<std::string>();
      rr->add_option("--n", *n, "half-order (order = 2n+1)")->required();
      rr->add_option("--seed", *seed, "sampler seed");
      rr->add_option("--mix", *mix, "accepted switch moves (default 10 p^2)");
      rr->add_option("--out", *out, "output file (default stdout)");
      rr->callback([n, seed, mix, out] {
        trn::SamplerConfig cfg;
        cfg.seed = *seed;
        cfg.mix_steps = *mix;
        write_output(trn::serialize(trn::random_regular(*n, cfg)), *out);
      });
    }
    {
      auto* me = gen->add_subcommand("moon-embed",
                                     "embed into a regular supertournament");
      auto in = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      me->add_option("--in", *in, "input .trn file")->required();
      me->add_option("--out", *out, "output file (default stdout)");
      me->callback([in, out] {
        auto h = read_trn(*in);
        auto emb = trn::moon_embed(h.t);
        trn::LabeledTournament lt{emb.t, {}};
        std::vector<int> embedded(emb.embed.begin(), emb.embed.end());
        lt.roles["embedded"] = embedded;
        if (emb.added) lt.roles["added"] = trn::set_to_vector(emb.added);
        write_output(trn::serialize(lt), *out);
      });
    }

    // ---- build ----------------------------------------------------------
    auto* build = app.add_subcommand("build", "construct the named fixtures");
    build->require_subcommand(1);

    {
      auto* g = build->add_subcommand("G", "exceptional family member");
      auto k = std::make_shared<int>(1);
      auto block_seed = std::make_shared<std::int64_t>(-1);
      auto out = std::make_shared<std::string>();
      g->add_option("--k", *k, "family parameter (order = 6k+3)")->required();
      g->add_option("--block-seed", *block_seed,
                    "seed for sampled regular blocks (default rotational)");
      g->add_option("--out", *out, "output file (default stdout)");
      g->callback([k, block_seed, out] {
        trn::GParams params{*k, {}};
        if (*block_seed >= 0)
          params.block_seed = static_cast<std::uint64_t>(*block_seed);
        write_output(trn::serialize(trn::build_G(params)), *out);
      });
    }
    {
      auto* r3 = build->add_subcommand("remark3", "order-11 sharpness fixture");
      auto out = std::make_shared<std::string>();
      r3->add_option("--out", *out, "output file (default stdout)");
      r3->callback(
          [out] { write_output(trn::serialize(trn::remark3_T11()), *out); });
    }
    {
      auto* r4 = build->add_subcommand("remark4", "order-9 fixture");
      auto out = std::make_shared<std::string>();
      r4->add_option("--out", *out, "output file (default stdout)");
      r4->callback(
          [out] { write_output(trn::serialize(trn::remark4_H9()), *out); });
    }
    {
      auto* cex = build->add_subcommand("lemma32", "length-3/4 counterexamples");
      auto variant = std::make_shared<int>(7);
      auto block_seed = std::make_shared<std::int64_t>(-1);
      auto out = std::make_shared<std::string>();
      cex->add_option("--variant", *variant, "7, 9, 11 or 15")->required();
      cex->add_option("--block-seed", *block_seed,
                      "block choice (variants 7/9/11: sampled regular block; "
                      "variant 15: orientation combo 0..3)");
      cex->add_option("--out", *out, "output file (default stdout)");
      cex->callback([variant, block_seed, out] {
        std::optional<std::uint64_t> seed;
        if (*block_seed >= 0) seed = static_cast<std::uint64_t>(*block_seed);
        write_output(
            trn::serialize(trn::lemma32_counterexample(*variant, seed)), *out);
      });
    }

    // ---- spectrum -------------------------------------------------------
    {
      auto* sp = app.add_subcommand("spectrum", "exact path-length spectrum");
      auto in = std::make_shared<std::string>();
      auto from = std::make_shared<int>(0);
      auto to = std::make_shared<int>(0);
      auto as_json = std::make_shared<bool>(false);
      sp->add_option("--in", *in, "input .trn file")->required();
      sp->add_option("--from", *from, "source vertex")->required();
      sp->add_option("--to", *to, "target vertex")->required();
      sp->add_flag("--json", *as_json, "machine output");
      sp->callback([in, from, to, as_json] {
        auto lt = read_trn(*in);
        auto spec = trn::path_spectrum(lt.t, *from, *to);
        if (*as_json) {
          json j = {{"source", spec.source},
                    {"target", spec.target},
                    {"lengths", spec.to_vector()}};
          std::cout << j.dump() << "\n";
        } else {
          std::cout << spectrum_human(spec);
        }
      });
    }

    // ---- check ----------------------------------------------------------
    auto* check = app.add_subcommand("check", "pancyclicity predicates");
    check->require_subcommand(1);
    {
      auto* pc = check->add_subcommand("pancyclic", "every arc on all cycle lengths");
      auto in = std::make_shared<std::string>();
      auto d = std::make_shared<int>(3);
      auto as_json = std::make_shared<bool>(false);
      pc->add_option("--in", *in, "input .trn file")->required();
      pc->add_option("--d", *d, "minimum cycle length (default 3)");
      pc->add_flag("--json", *as_json, "machine output");
      pc->callback([in, d, as_json, &rc] {
        auto lt = read_trn(*in);
        auto res = trn::is_d_arc_pancyclic(lt.t, *d);
        if (*as_json) {
          json j = {{"d", *d}, {"holds", res.holds}};
          if (!res.holds) j["failing"] = {{"u", res.u}, {"v", res.v}, {"k", res.k}};
          std::cout << j.dump() << "\n";
        } else if (res.holds) {
          std::cout << "arc-pancyclic(d=" << *d << "): yes\n";
        } else {
          std::cout << "arc-pancyclic(d=" << *d << "): no, arc (" << res.u
                    << "," << res.v << ") misses a " << res.k << "-cycle\n";
        }
        if (!res.holds) rc = 1;
      });
    }
    {
      auto* pn = check->add_subcommand("panconnected",
                                       "every pair joined at all lengths");
      auto in = std::make_shared<std::string>();
      auto d = std::make_shared<int>(3);
      auto as_json = std::make_shared<bool>(false);
      pn->add_option("--in", *in, "input .trn file")->required();
      pn->add_option("--d", *d, "minimum path length (default 3)");
      pn->add_flag("--json", *as_json, "machine output");
      pn->callback([in, d, as_json, &rc] {
        auto lt = read_trn(*in);
        auto res = trn::is_d_strongly_panconnected(lt.t, *d);
        if (*as_json) {
          json j = {{"d", *d}, {"holds", res.holds}};
          if (!res.holds) j["failing"] = {{"x", res.x}, {"y", res.y}, {"k", res.k}};
          std::cout << j.dump() << "\n";
        } else if (res.holds) {
          std::cout << "strongly-panconnected(d=" << *d << "): yes\n";
        } else {
          std::cout << "strongly-panconnected(d=" << *d << "): no, pair ("
                    << res.x << "," << res.y << ") misses length " << res.k
                    << "\n";
        }
        if (!res.holds) rc = 1;
      });
    }

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run verification campaigns");
    verify->require_subcommand(1);
    verify->fallthrough();  // --json/--out/--threads may follow the subcommand
    verify->add_flag("--json", json_out, "emit the record stream as JSON lines");
    verify->add_option("--out", out_file, "write the record stream to a file");
    verify->add_option("--threads", threads, "worker threads (default 1)");

    {
      auto* pe = verify->add_subcommand("paper-examples",
                                        "deterministic fixture claims");
      pe->callback([&] {
        rc = run_verify({json_out, out_file, threads},
                        [](const trn::ReportSink& sink) {
                          return trn::run_paper_examples(sink);
                        });
      });
    }
    {
      auto* t15 = verify->add_subcommand("thm15", "path-extension campaign");
      auto orders = std::make_shared<std::vector<int>>(std::vector<int>{11, 13});
      auto count = std::make_shared<int>(50);
      auto seed = std::make_shared<std::uint64_t>(7);
      auto rule = std::make_shared<std::string>("paper");
      t15->add_option("--orders", *orders, "odd orders in [11,21]")
          ->delimiter(',');
      t15->add_option("--count", *count, "instances per order");
      t15->add_option("--seed", *seed, "campaign seed");
      t15->add_option("--rule", *rule, "paper | boundary")
          ->check(CLI::IsMember({"paper", "boundary"}));
      t15->callback([&, orders, count, seed, rule] {
        trn::Thm15Config cfg;
        cfg.orders = *orders;
        cfg.count = *count;
        cfg.seed = *seed;
        cfg.threads = threads;
        cfg.rule = *rule == "paper" ? trn::SBoundRule::paper
                                    : trn::SBoundRule::boundary;
        rc = run_verify({json_out, out_file, threads},
                        [cfg](const trn::ReportSink& sink) {
                          return trn::run_theorem15_campaign(cfg, sink);
                        });
      });
    }
    {
      auto* l32 = verify->add_subcommand("lem32", "length-3/4 campaign");
      auto count = std::make_shared<int>(200);
      auto seed = std::make_shared<std::uint64_t>(7);
      l32->add_option("--count", *count, "sampled instances");
      l32->add_option("--seed", *seed, "campaign seed");
      l32->callback([&, count, seed] {
        trn::Lem32Config cfg;
        cfg.count = *count;
        cfg.seed = *seed;
        cfg.threads = threads;
        rc = run_verify({json_out, out_file, threads},
                        [cfg](const trn::ReportSink& sink) {
                          return trn::run_lemma32_campaign(cfg, sink);
                        });
      });
    }
    {
      auto* t16 = verify->add_subcommand("thm16", "semidegree-window campaign");
      auto count = std::make_shared<int>(50);
      auto seed = std::make_shared<std::uint64_t>(7);
      auto orders = std::make_shared<std::vector<int>>(std::vector<int>{11, 13});
      t16->add_option("--count", *count, "instances per order per window");
      t16->add_option("--seed", *seed, "campaign seed");
      t16->add_option("--orders", *orders, "orders to sample")->delimiter(',');
      t16->callback([&, count, seed, orders] {
        trn::Thm16Config cfg;
        cfg.count = *count;
        cfg.seed = *seed;
        cfg.orders = *orders;
        cfg.threads = threads;
        rc = run_verify({json_out, out_file, threads},
                        [cfg](const trn::ReportSink& sink) {
                          return trn::run_theorem16_campaign(cfg, sink);
                        });
      });
    }
    {
      auto* lp = verify->add_subcommand("lemmas33-34",
                                        "path-configuration campaign");
      auto count = std::make_shared<int>(200);
      auto seed = std::make_shared<std::uint64_t>(7);
      lp->add_option("--count", *count, "conforming configurations");
      lp->add_option("--seed", *seed, "campaign seed");
      lp->callback([&, count, seed] {
        trn::LemmaPropertiesConfig cfg;
        cfg.count = *count;
        cfg.seed = *seed;
        rc = run_verify({json_out, out_file, threads},
                        [cfg](const trn::ReportSink& sink) {
                          return trn::run_lemma_properties_campaign(cfg, sink);
                        });
      });
    }

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const trn::Error& e) {
    std::cerr << trn::errc_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

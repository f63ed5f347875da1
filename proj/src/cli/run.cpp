#include "aener/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aener/config.hpp"
#include "aener/corpus.hpp"
#include "aener/ensemble.hpp"
#include "aener/error.hpp"
#include "aener/eval.hpp"
#include "aener/llm/predict.hpp"
#include "aener/synth.hpp"
#include "aener/tagging.hpp"

namespace aener::cli {

namespace {

// Writes to --out when given, otherwise to the command's output stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DataError("cannot write " + path);
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct Flags {
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  std::string format = "table";

  // ingest-vaers
  std::string data, vax, symptoms, vax_type;
  // filter-social
  std::string input, rules, source = "twitter";
  // split
  std::string ratios;
  // stats / ensemble positional corpora
  std::vector<std::string> files;
  // predict
  std::string template_name, template_file, cache, endpoint, model;
  double temperature = 0.0;
  int max_tokens = 0;
  int max_parallel = 0;
  bool offline = false;
  // ensemble
  std::string mode;
  std::size_t threshold = 0;
  // score / errors / agreement
  std::string gold, pred, a, b, match = "both";
  // synth
  std::size_t n_docs = 100, min_spans = 1, max_spans = 5, predictor = 0;
  std::string from;
  double p_delete = 0.15, p_spurious = 0.15, p_jitter = 0.1;
};

RunConfig base_config(const Flags& f) {
  return f.config.empty() ? RunConfig{} : load_config(f.config);
}

void check_format(const std::string& format) {
  if (format != "table" && format != "jsonl") {
    throw UsageError("--format must be table or jsonl");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adverse-event NER toolkit: corpora, prompting, ensembling and scoring", "aener"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "aener 1.0.0");
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "Run configuration (JSON)")->check(CLI::ExistingFile);
    sub->add_option("--out", f.out, "Output path (default: stdout)");
  };

  auto* ingest = app.add_subcommand("ingest-vaers", "Join VAERS CSV exports into a corpus");
  common(ingest);
  ingest->add_option("--data", f.data, "VAERSDATA.csv")->required();
  ingest->add_option("--vax", f.vax, "VAERSVAX.csv")->required();
  ingest->add_option("--symptoms", f.symptoms, "VAERSSYMPTOMS.csv (metadata only)");
  auto* vax_type_opt = ingest->add_option("--vax-type", f.vax_type, "VAX_TYPE to keep (default COVID19)");

  auto* social = app.add_subcommand("filter-social", "Filter social-media records into a corpus");
  common(social);
  social->add_option("--input", f.input, "Records, one JSON object per line")->required();
  social->add_option("--rules", f.rules, "Filter rules (JSON)");
  social->add_option("--source", f.source, "twitter or reddit")
      ->check(CLI::IsMember({"twitter", "reddit"}));

  auto* split = app.add_subcommand("split", "Shuffle and split a corpus into train/val/test");
  common(split);
  split->add_option("--input", f.input, "Corpus to split")->required();
  auto* ratios_opt = split->add_option("--ratios", f.ratios, "train:val:test, default 8:1:1");
  auto* split_seed = split->add_option("--seed", f.seed, "Shuffle seed (default 42)");
  split->get_option("--out")->description("Output directory for train/val/test.jsonl")->required();

  auto* stats = app.add_subcommand("stats", "Entity counts per corpus file");
  common(stats);
  stats->add_option("corpora", f.files, "Corpus files, one per split")->required();
  stats->add_option("--format", f.format, "table or jsonl");

  auto* predict = app.add_subcommand("predict", "Prompt a text-generation backend for entities");
  common(predict);
  predict->add_option("--input", f.input, "Corpus to annotate")->required();
  auto* tmpl_opt = predict->add_option("--template", f.template_name, "Built-in template name");
  auto* tmpl_file_opt = predict->add_option("--template-file", f.template_file, "Template JSON");
  auto* cache_opt = predict->add_option("--cache", f.cache, "Completion cache file");
  auto* endpoint_opt = predict->add_option("--endpoint", f.endpoint, "Chat-completions URL");
  auto* model_opt = predict->add_option("--model", f.model, "Model name");
  auto* temp_opt = predict->add_option("--temperature", f.temperature, "Sampling temperature");
  auto* max_tokens_opt = predict->add_option("--max-tokens", f.max_tokens, "Maximum output tokens");
  auto* parallel_opt = predict->add_option("--max-parallel", f.max_parallel, "Concurrent requests");
  predict->add_flag("--offline", f.offline, "Serve completions from the cache only");

  auto* ensemble = app.add_subcommand("ensemble", "Majority-vote k prediction corpora");
  common(ensemble);
  ensemble->add_option("predictions", f.files, "Prediction corpora (k >= 2)")->required();
  auto* mode_opt = ensemble->add_option("--mode", f.mode, "span or token");
  auto* threshold_opt = ensemble->add_option("--threshold", f.threshold, "Minimum votes");

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--gold", f.gold, "Gold corpus")->required();
    sub->add_option("--pred", f.pred, "Predicted corpus")->required();
    sub->add_option("--format", f.format, "table or jsonl");
  };
  auto* score = app.add_subcommand("score", "Strict and relaxed P/R/F1 per entity type");
  common(score);
  add_pair(score);
  score->add_option("--match", f.match, "strict, relaxed or both")
      ->check(CLI::IsMember({"strict", "relaxed", "both"}));

  auto* errors = app.add_subcommand("errors", "Error taxonomy per entity type");
  common(errors);
  add_pair(errors);

  auto* agree = app.add_subcommand("agreement", "Inter-annotator agreement");
  common(agree);
  agree->add_option("--a", f.a, "First annotation corpus")->required();
  agree->add_option("--b", f.b, "Second annotation corpus")->required();
  agree->add_option("--format", f.format, "table or jsonl");

  auto* synth = app.add_subcommand("synth", "Synthetic gold corpora and noisy predictors");
  common(synth);
  synth->add_option("--seed", f.seed, "Master seed")->required();
  synth->add_option("--n-docs", f.n_docs, "Documents to generate");
  synth->add_option("--min-spans", f.min_spans, "Minimum spans per document");
  synth->add_option("--max-spans", f.max_spans, "Maximum spans per document");
  synth->add_option("--from", f.from, "Gold corpus to perturb instead of generating");
  synth->add_option("--predictor", f.predictor, "Predictor index for --from");
  synth->add_option("--p-delete", f.p_delete, "Probability a gold span is dropped");
  synth->add_option("--p-spurious", f.p_spurious, "Mean spurious spans per document");
  synth->add_option("--p-jitter", f.p_jitter, "Probability a boundary moves one token");

  auto* conll = app.add_subcommand("export-conll", "Write IOB tags as surface<TAB>tag lines");
  common(conll);
  conll->add_option("--input", f.input, "Corpus")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ingest) {
      auto cfg = base_config(f);
      const auto vax_type = vax_type_opt->count() ? f.vax_type : cfg.vax_type;
      std::optional<std::filesystem::path> symptoms;
      if (!f.symptoms.empty()) symptoms = f.symptoms;
      const auto corpus = ingest_vaers(f.data, f.vax, symptoms, vax_type);
      Sink sink(f.out, out);
      write_corpus(corpus, *sink);
      err << "ingest-vaers: " << corpus.size() << " documents with VAX_TYPE=" << vax_type << '\n';
    } else if (*social) {
      auto cfg = base_config(f);
      FilterRules rules;
      if (!f.rules.empty()) {
        rules = load_filter_rules(f.rules);
      } else if (cfg.filter_rules) {
        rules = load_filter_rules(*cfg.filter_rules);
      }
      const auto records = load_social_records(f.input);
      const auto result = filter_social(records, rules, parse_source(f.source));
      Sink sink(f.out, out);
      write_corpus(result.kept, *sink);
      err << "filter-social: kept " << result.kept.size() << " of " << records.size() << '\n';
      for (const auto& [reason, n] : result.rejected) {
        err << "  rejected " << to_string(reason) << ": " << n << '\n';
      }
    } else if (*split) {
      auto cfg = base_config(f);
      SplitSpec spec = cfg.split;
      if (ratios_opt->count()) spec.ratios = parse_ratios(f.ratios);
      if (split_seed->count()) spec.seed = f.seed;
      const auto corpus = load_corpus(f.input);
      const auto parts = split_corpus(corpus, spec);
      const std::filesystem::path dir = f.out;
      std::filesystem::create_directories(dir);
      write_corpus(parts.train, dir / "train.jsonl");
      write_corpus(parts.val, dir / "val.jsonl");
      write_corpus(parts.test, dir / "test.jsonl");
      out << "# split seed=" << spec.seed << " ratios=" << spec.ratios[0] << ':'
          << spec.ratios[1] << ':' << spec.ratios[2] << '\n'
          << "train " << parts.train.size() << "\nval " << parts.val.size() << "\ntest "
          << parts.test.size() << '\n';
    } else if (*stats) {
      check_format(f.format);
      std::vector<std::pair<std::string, EntityStats>> rows;
      for (const auto& file : f.files) {
        rows.emplace_back(std::filesystem::path(file).stem().string(),
                          entity_stats(load_corpus(file)));
      }
      Sink sink(f.out, out);
      if (f.format == "table") {
        *sink << format_stats_table(rows);
      } else {
        for (const auto& [name, st] : rows) {
          nlohmann::ordered_json j;
          j["split"] = name;
          j["documents"] = st.overall.documents;
          for (EntityType t : kEntityTypes) j[std::string(to_string(t))] = st.overall.by_type[index_of(t)];
          *sink << j.dump() << '\n';
        }
      }
    } else if (*predict) {
      auto cfg = base_config(f);
      if (endpoint_opt->count()) cfg.backend.endpoint = f.endpoint;
      if (parallel_opt->count()) cfg.backend.max_parallel = f.max_parallel;
      if (f.offline) cfg.backend.offline = true;
      if (model_opt->count()) cfg.generation.model_name = f.model;
      if (temp_opt->count()) cfg.generation.temperature = f.temperature;
      if (max_tokens_opt->count()) cfg.generation.max_output_tokens = f.max_tokens;
      if (cache_opt->count()) cfg.cache = f.cache;
      llm::check(cfg.generation);

      llm::PromptTemplate tmpl;
      if (tmpl_file_opt->count()) {
        tmpl = llm::load_template(f.template_file);
      } else if (!tmpl_opt->count() && cfg.template_file) {
        tmpl = llm::load_template(cfg.template_file->string());
      } else {
        tmpl = llm::builtin_template(tmpl_opt->count() ? f.template_name : cfg.template_name);
      }

      const auto corpus = load_corpus(f.input);
      llm::PredictionCache cache = cfg.cache ? llm::PredictionCache(*cfg.cache) : llm::PredictionCache();
      llm::CompletionClient client(cfg.backend, cache);
      client.set_logger([&err](const std::string& line) { err << line << '\n'; });
      llm::GroundingCounters counters;
      const auto predicted = llm::predict_corpus(corpus, tmpl, cfg.generation, client, counters);
      Sink sink(f.out, out);
      write_corpus(predicted, *sink);
      err << "predict: template=" << tmpl.name << " model=" << cfg.generation.model_name
          << " documents=" << predicted.size() << " http_requests=" << client.http_requests()
          << " cache_hits=" << client.cache_hits() << " ungrounded=" << counters.ungrounded
          << " merged=" << counters.merged << " untyped=" << counters.untyped
          << " unparsed=" << counters.unparsed << '\n';
    } else if (*ensemble) {
      auto cfg = base_config(f);
      EnsembleInput input;
      input.mode = mode_opt->count() ? parse_vote_mode(f.mode) : cfg.ensemble_mode;
      input.threshold = threshold_opt->count() ? f.threshold : cfg.ensemble_threshold;
      if (threshold_opt->count() && f.threshold == 0) throw UsageError("--threshold must be >= 1");
      for (const auto& file : f.files) input.members.push_back(load_corpus(file));
      const auto voted = ensemble_corpus(input);
      Sink sink(f.out, out);
      write_corpus(voted, *sink);
      err << "ensemble: mode=" << to_string(input.mode) << " k=" << input.members.size()
          << " threshold=" << detail::resolve_threshold(input) << '\n';
    } else if (*score) {
      check_format(f.format);
      const auto report = score_corpus(load_corpus(f.gold), load_corpus(f.pred));
      const bool strict = f.match != "relaxed";
      const bool relaxed = f.match != "strict";
      Sink sink(f.out, out);
      if (f.format == "table") {
        *sink << "# score gold=" << f.gold << " pred=" << f.pred << '\n'
              << format_score_table(report, strict, relaxed);
      } else {
        *sink << format_score_jsonl(report, strict, relaxed);
      }
    } else if (*errors) {
      check_format(f.format);
      const auto breakdown = categorize_corpus(load_corpus(f.gold), load_corpus(f.pred));
      Sink sink(f.out, out);
      if (f.format == "table") {
        *sink << "# errors gold=" << f.gold << " pred=" << f.pred << '\n'
              << format_error_table(breakdown);
      } else {
        *sink << format_error_jsonl(breakdown);
      }
    } else if (*agree) {
      check_format(f.format);
      const auto report = agreement(load_corpus(f.a), load_corpus(f.b));
      Sink sink(f.out, out);
      if (f.format == "table") {
        *sink << "# agreement a=" << f.a << " b=" << f.b << '\n' << format_agreement_table(report);
      } else {
        *sink << format_agreement_jsonl(report);
      }
    } else if (*synth) {
      Corpus corpus;
      if (f.from.empty()) {
        corpus = gen_gold(GoldSpec{f.seed, f.n_docs, f.min_spans, f.max_spans});
        err << "# synth gold seed=" << f.seed << " n_docs=" << f.n_docs << '\n';
      } else {
        NoiseProfile profile{f.p_delete, f.p_spurious, f.p_jitter,
                             predictor_seed(f.seed, f.predictor)};
        corpus = perturb(load_corpus(f.from), profile);
        err << "# synth perturb seed=" << f.seed << " predictor=" << f.predictor
            << " p_delete=" << f.p_delete << " p_spurious=" << f.p_spurious
            << " p_jitter=" << f.p_jitter << '\n';
      }
      Sink sink(f.out, out);
      write_corpus(corpus, *sink);
    } else if (*conll) {
      const auto corpus = load_corpus(f.input);
      Sink sink(f.out, out);
      write_conll(corpus, *sink);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BackendError& e) {
    err << "backend error: " << e.what() << '\n';
    return kBackend;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kOk;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace aener::cli

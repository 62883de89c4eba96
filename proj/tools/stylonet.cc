// Copyright 2026 The stylonet Authors
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

// stylonet: text-network stylometry from the command line.
//
//   stylonet synth        --out DIR [--classes 2 --docs 40 --tokens 5000]
//   stylonet features     --manifest FILE --out DIR [--lexicon FILE] ...
//   stylonet classify     --features DIR --out DIR [--pairs int,stop,bg] ...
//   stylonet metrics-dump --manifest FILE --out DIR
//
// Exit status: 0 success, 2 invalid arguments, 3 runtime failure.

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "stylonet/error.h"
#include "stylonet/experiment.h"
#include "stylonet/simd.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

void add_corpus_options(CLI::App* cmd, stylonet::RunConfig& c) {
  // Help is --help only; --h is the walk-length list.
  cmd->set_help_flag("--help", "print this help and exit");
  cmd->add_option("--manifest", c.manifest, "CSV with id,path,label rows")->required();
  cmd->add_option("--lexicon", c.lexicon, "surface<TAB>lemma file");
  cmd->add_option("--stopwords", c.stopwords, "file: a word list; corpus: words in every document")
      ->check(CLI::IsMember({"file", "corpus"}))
      ->capture_default_str();
  cmd->add_option("--stopword-list", c.stopword_list, "word list for --stopwords file");
  cmd->add_option("--h", c.levels, "accessibility levels")->delimiter(',')->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word-adjacency network stylometry"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");
  stylonet::RunConfig c;
  c.threads = std::max(1u, std::thread::hardware_concurrency());
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "list written files");

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", c.out, "output directory")->required();
    cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
    cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* features = app.add_subcommand("features", "extract the four feature families");
  add_corpus_options(features, c);
  add_common(features);
  features->add_option("--eta", c.eta, "lemmas in the top-frequency mean")->capture_default_str();
  features->add_option("--shuffles", c.shuffles, "shuffled baselines per document")
      ->capture_default_str();
  features->add_option("--min-occurrences", c.min_occurrences,
                       "minimum count for an intermittency value")
      ->capture_default_str();

  CLI::App* classify = app.add_subcommand("classify", "cross-validate and fuse two families");
  add_common(classify);
  classify->add_option("--features", c.features, "directory written by 'features'");
  classify->add_option("--pairs", c.pairs, "families fused with net")
      ->delimiter(',')
      ->capture_default_str();
  classify->add_option("--traditional", c.traditional, "traditional feature CSV");
  classify->add_option("--network", c.network, "network feature CSV");
  classify->add_option("--classifier", c.classifier, "fknn or centroid")
      ->check(CLI::IsMember({"fknn", "centroid"}))
      ->capture_default_str();
  classify->add_option("--k", c.k, "neighbour counts")->delimiter(',')->capture_default_str();
  classify->add_option("--folds", c.folds, "cross-validation folds")->capture_default_str();
  classify->add_option("--lambda-step", c.lambda_step, "hybrid grid step")->capture_default_str();
  classify->add_option("--theta-step", c.theta_step, "tiebreaker grid step")
      ->capture_default_str();

  CLI::App* synth = app.add_subcommand("synth", "write a seeded synthetic corpus");
  add_common(synth);
  synth->add_option("--classes", c.synth.classes, "number of classes")->capture_default_str();
  synth->add_option("--docs", c.synth.docs_per_class, "documents per class")
      ->capture_default_str();
  synth->add_option("--tokens", c.synth.tokens, "tokens per document")->capture_default_str();
  synth->add_option("--vocabulary", c.synth.vocabulary, "content pseudo-words")
      ->capture_default_str();

  CLI::App* dump = app.add_subcommand("metrics-dump", "per-node network metrics per document");
  add_corpus_options(dump, c);
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    stylonet::CommandReport report;
    if (*features) report = stylonet::cmd_features(c);
    else if (*classify) report = stylonet::cmd_classify(c);
    else if (*synth) report = stylonet::cmd_synth(c);
    else report = stylonet::cmd_metrics_dump(c);
    for (const std::string& w : report.warnings) std::cerr << "warning: " << w << '\n';
    if (verbose) {
      std::cerr << "simd: " << stylonet::simd::isa_name(stylonet::simd::active_isa()) << '\n';
      for (const auto& p : report.written) std::cerr << "wrote " << p.string() << '\n';
    }
    return EXIT_SUCCESS;
  } catch (const stylonet::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

// lens_alex: Alexander polynomials of closed mixed braids in lens spaces.
//
//   lens_alex --word "t s1^3" --n 2 --mode lens --p 3 --q 1
//   lens_alex --batch words.txt --n 2 --p 3 --q 1 --oracle

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lensalex/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = lensalex::cli;

  CLI::App app{"Alexander polynomial of links in L(p,q) from mixed braid words"};
  cli::JobSpec spec;
  std::string mode = "lens";
  std::string format = "plain";
  std::string batch;
  long p = 0, q = 0;

  auto* word_opt = app.add_option("--word,-w", spec.word, "braid word, e.g. \"t^-1 s1^3 s2\"");
  app.add_option("--n,-n", spec.n, "moving strands (mixed modes) or strands (classical modes)")
      ->check(CLI::PositiveNumber);
  auto* p_opt = app.add_option("--p", p, "lens space parameter p");
  auto* q_opt = app.add_option("--q", q, "lens space parameter q");
  app.add_option("--mode", mode, "lens | solid-torus | classical | multivariable")
      ->check(CLI::IsMember({"lens", "solid-torus", "classical", "multivariable"}));
  app.add_option("--format", format, "plain | latex | json")
      ->check(CLI::IsMember({"plain", "latex", "json"}));
  app.add_flag("--oracle", spec.oracle, "cross-check against the Fox-calculus oracle");
  auto* batch_opt =
      app.add_option("--batch", batch, "file with one word (or `word ; n ; p ; q`) per line");
  word_opt->excludes(batch_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kInvalidInput;
  }

  spec.mode = *cli::parse_mode(mode);
  spec.format = *cli::parse_format(format);
  if (*p_opt) spec.p = p;
  if (*q_opt) spec.q = q;

  cli::Outcome outcome;
  if (*batch_opt) {
    std::ifstream in(batch);
    if (!in) {
      std::cerr << "error: cannot read " << batch << "\n";
      return cli::kInvalidInput;
    }
    outcome = cli::run_batch(in, spec, cli::thread_cap_from_env());
  } else {
    outcome = cli::run_single(spec);
  }
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}

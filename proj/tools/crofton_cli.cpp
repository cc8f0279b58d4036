// crofton: certified lengths and directional variations of plane paths.
//
//   crofton length    [spec.json] [--eps 1e-6]
//   crofton variation [spec.json] --theta pi/2 [--eps 1e-6] [--route auto|length|direct]
//   crofton profile   [spec.json] [--count 16] [--eps 1e-6] [--format csv|json]
//   crofton decide    [spec.json] --theta pi/2 --a 0.5 --b 0.75
//   crofton demo      --n 8 --k 3
//   crofton gen       --family sawtooth --n 3 [--tilt]
//
// Exit codes: 0 success, 1 resource or oracle failure, 2 invalid input,
// 3 certification unavailable (a bracket is printed instead).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "crofton/api.hpp"
#include "crofton/counterexamples.hpp"
#include "crofton/errors.hpp"
#include "crofton/io.hpp"

using namespace crofton;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnavailable = 3;

struct Options {
  std::string input = "-";
  std::string eps = "1e-6";
  std::string theta;
  std::string a, b;
  std::string format = "json";
  std::string route = "auto";
  std::string family = "sawtooth";
  std::string bits;
  int count = 16;
  int digits = 12;
  int n = 1;
  int k = 1;
  unsigned workers = 0;
  bool tilt = false;
};

PathSpec read_spec(const std::string& input) {
  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input);
    if (!in) throw InvalidInput("cannot open '" + input + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return path_from_json(j);
}

unsigned worker_count(const Options& o) {
  if (o.workers > 0) return o.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

Direction direction_of(const Options& o) {
  if (o.theta.empty()) throw InvalidInput("--theta is required");
  return to_direction(parse_angle(o.theta));
}

int emit(const Outcome& out) {
  print(out.json);
  if (out.certified) return 0;
  std::cerr << "certification unavailable: a sampled graph with only a Lipschitz constant admits a "
               "sound bracket, not a converging enclosure\n";
  return kExitUnavailable;
}

int cmd_length(const Options& o) {
  return emit(length_report(read_spec(o.input), parse_tolerance(o.eps), worker_count(o), o.digits));
}

int cmd_variation(const Options& o) {
  PathSpec path = read_spec(o.input);
  return emit(variation_report(path, direction_of(o), parse_tolerance(o.eps), o.route, o.digits));
}

int cmd_profile(const Options& o) {
  PathSpec path = read_spec(o.input);
  if (path.as<SampledGraph>()) return emit(length_report(path, parse_tolerance(o.eps), 1, o.digits));
  auto samples = profile_samples(path, o.count, parse_tolerance(o.eps), worker_count(o));
  if (o.format == "csv") {
    std::cout << profile_csv(samples, o.digits);
  } else {
    print(profile_json(samples, o.digits));
  }
  return 0;
}

int cmd_decide(const Options& o) {
  PathSpec path = read_spec(o.input);
  if (o.a.empty() || o.b.empty()) throw InvalidInput("--a and --b are required");
  return emit(decide_report(path, direction_of(o), parse_rational(o.a), parse_rational(o.b), o.digits));
}

int cmd_demo(const Options& o) {
  if (o.n < 1 || o.k < 1) throw InvalidInput("--n and --k must be >= 1");
  print(demo_to_json(adversarial_demo(o.n, o.k), o.digits));
  return 0;
}

std::vector<int> parse_bits(const std::string& text) {
  std::vector<int> bits;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item != "0" && item != "1") throw InvalidInput("bits must be 0 or 1");
    bits.push_back(item == "1");
  }
  return bits;
}

int cmd_gen(const Options& o) {
  std::cout << path_to_json(generate(o.family, o.n, parse_bits(o.bits), o.tilt)).dump() << '\n';
  return 0;
}

void common_flags(CLI::App* sub, Options& o, bool takes_input) {
  if (takes_input) sub->add_option("input", o.input, "PathSpec JSON file, '-' for standard input");
  sub->add_option("--digits", o.digits, "decimal digits in printed enclosures")->check(CLI::Range(1, 200));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified lengths and directional variations of plane paths"};
  app.require_subcommand(1);
  Options o;

  auto* length = app.add_subcommand("length", "certified length enclosure");
  common_flags(length, o, true);
  length->add_option("--eps", o.eps, "tolerance, decimal or p/q");
  length->add_option("--workers", o.workers, "threads for net evaluation (0 = all cores)");

  auto* variation = app.add_subcommand("variation", "certified directional variation");
  common_flags(variation, o, true);
  variation->add_option("--eps", o.eps, "tolerance, decimal or p/q");
  variation->add_option("--theta", o.theta, "direction in radians, e.g. 0.3, pi/4, 2pi/3")->required();
  variation->add_option("--route", o.route, "auto, length or direct")
      ->check(CLI::IsMember({"auto", "length", "direct"}));

  auto* profile = app.add_subcommand("profile", "variation profile over theta = j pi / count");
  common_flags(profile, o, true);
  profile->add_option("--eps", o.eps, "tolerance of the underlying partition");
  profile->add_option("--count", o.count, "number of intervals in [0, pi]");
  profile->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  profile->add_option("--workers", o.workers, "threads for net evaluation (0 = all cores)");

  auto* decide = app.add_subcommand("decide", "decide v_theta > a or v_theta < b");
  common_flags(decide, o, true);
  decide->add_option("--theta", o.theta, "direction in radians")->required();
  decide->add_option("--a", o.a, "lower threshold")->required();
  decide->add_option("--b", o.b, "upper threshold")->required();

  auto* demo = app.add_subcommand("demo", "sampled bracket against exact variation of a sawtooth");
  common_flags(demo, o, false);
  demo->add_option("--n", o.n, "sawtooth index")->required();
  demo->add_option("--k", o.k, "sample grid has 2^k cells")->required();

  auto* gen = app.add_subcommand("gen", "emit a counterexample PathSpec");
  gen->add_option("--family", o.family, "sawtooth or mixture")->check(CLI::IsMember({"sawtooth", "mixture"}));
  gen->add_option("--n", o.n, "sawtooth index");
  gen->add_option("--bits", o.bits, "mixture bits, comma separated");
  gen->add_flag("--tilt", o.tilt, "add x to the ordinate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }
  if (profile->parsed() && profile->count("--format") == 0) o.format = "csv";

  try {
    if (length->parsed()) return cmd_length(o);
    if (variation->parsed()) return cmd_variation(o);
    if (profile->parsed()) return cmd_profile(o);
    if (decide->parsed()) return cmd_decide(o);
    if (demo->parsed()) return cmd_demo(o);
    if (gen->parsed()) return cmd_gen(o);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const CertificationUnavailable& e) {
    std::cerr << "certification unavailable: " << e.what() << '\n';
    return kExitUnavailable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

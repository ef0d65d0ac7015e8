// Acceptance gate: one PASS/FAIL line per criterion. Exit status is 0 only if every criterion passes.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chordspace/algebra.hpp"
#include "chordspace/digest.hpp"
#include "chordspace/io.hpp"
#include "chordspace/realisability.hpp"
#include "chordspace/weights.hpp"
#include "oracle/oracle.hpp"

using namespace chordspace;

namespace {

// Pinned limits, seconds.
constexpr double kEnumerationLimit = 10.0;
constexpr double kDimensionLimit = 120.0;
constexpr double kWellDefinedLimit = 300.0;
constexpr double kLemmaLimit = 120.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double seconds = since(start);
  if (!out.pass) ++failures;
  std::printf("criterion %d %-28s %s (%.2f s)%s\n", id, name.c_str(), out.pass ? "PASS" : "FAIL", seconds,
              out.detail.str().c_str());
  std::fflush(stdout);
}

oracle::Labelled labelled_of(const MatchingWord& d) {
  oracle::Labelled out;
  for (auto l : d.labels()) out.seq.push_back(l);
  if (d.framed()) {
    for (auto b : d.framing()) out.bit.push_back(b);
  }
  return out;
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string command = std::string(CHORDSPACE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string digest_of(const json& doc) {
  json body = doc;
  body.erase("manifest");
  return sha256_hex(body.dump());
}

void enumeration(Outcome& out) {
  const std::size_t counts[] = {1, 1, 2, 5, 18, 105};
  for (int n = 0; n <= 5; ++n) {
    const auto orbits = oracle::orbits(n, false);
    std::set<oracle::Key> expected;
    for (const auto& [key, size] : orbits) expected.insert(key);
    std::set<oracle::Key> got;
    const auto list = enumerate_chord_diagrams(static_cast<std::size_t>(n));
    for (const auto& d : list) got.insert(oracle::circle_key(labelled_of(d)));
    out.require(got == expected && list.size() == expected.size(), "orbits differ at n=" + std::to_string(n));
    out.require(expected.size() == counts[n], "oracle count at n=" + std::to_string(n));
  }
  out.detail << " counts 1,2,5,18,105 at n=1..5";
}

void dimensions(Outcome& out) {
  const std::size_t four[] = {1, 1, 2, 3, 6, 10};
  const std::size_t both[] = {1, 0, 1, 1, 3, 4};
  for (int n = 0; n <= 5; ++n) {
    for (bool one : {false, true}) {
      const std::size_t frozen = one ? both[n] : four[n];
      const RelationSpec spec{false, true, one};
      const auto q = quotient_basis(static_cast<std::size_t>(n), false,
                                    generate_relations(static_cast<std::size_t>(n), spec), Field::rational);
      const auto dense = oracle::quotient_dim(n, false, true, one);
      const std::string at = (one ? "4t,1t n=" : "4t n=") + std::to_string(n);
      out.require(dense.dim() == frozen, "oracle disagrees with table at " + at);
      out.require(q.dimension() == frozen, "library disagrees at " + at);
    }
  }
  out.detail << " 4t (1,1,2,3,6,10), 4t+1t (1,0,1,1,3,4)";
}

void phi_isomorphism(Outcome& out) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto r = check_phi_intertwine(SignSchema::uniform(), SignSchema::uniform(), n, Field::rational);
    out.require(r.holds, "uniform does not intertwine with itself at n=" + std::to_string(n));
  }
  const auto search = schema_search({2, 3}, Field::rational);
  const auto& first = search.levels.at(0).with_uniform;
  const auto& second = search.levels.at(1).with_uniform;
  out.require(!first.empty(), "no schema intertwined at n=2");
  out.require(search.all_stable, std::to_string(first.size() - second.size()) + " of " +
                                     std::to_string(first.size()) + " n=2 survivors drop out at n=3");
  out.detail << " n=2: " << search.levels[0].span_classes << " span classes, " << first.size()
             << " schemas intertwined with uniform; n=3: " << second.size() << " survive";
  const auto core = schema_search({2, 3, 4}, Field::rational);
  out.detail << "; n=4 keeps " << core.stable.size() << "; starred " << search.starred;
}

void well_definedness(Outcome& out) {
  std::size_t pairs = 0;
  for (std::size_t a = 1; a <= 5; ++a) {
    for (std::size_t b = a; a + b <= 6; ++b) {
      const auto r = well_defined_check(a, b, RelationSpec{false, true, false}, Field::rational, 4);
      out.require(r.failing_pairs == 0,
                  std::to_string(r.failing_pairs) + " failing pairs at " + std::to_string(a) + "," +
                      std::to_string(b));
      ++pairs;
    }
  }
  std::size_t without = 0;
  for (const auto& [a, b] : {std::pair{1U, 3U}, std::pair{2U, 2U}}) {
    without += well_defined_check(a, b, RelationSpec{false, false, false}, Field::rational, 4).failing_pairs;
  }
  out.require(without >= 1, "no failure with relations disabled at total order 4");
  out.detail << " " << pairs << " order pairs clean modulo 4t; " << without
             << " failing pairs without relations at total 4";
}

void commutativity(Outcome& out) {
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = a; a + b <= 5; ++b) {
      const auto r = commutator_check(a, b, RelationSpec{false, true, false}, Field::rational,
                                      SpaceShape::circle, 4);
      out.require(r.non_commuting == 0 && !r.convention_dependent,
                  "unframed circle " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  std::size_t pairs = 0;
  std::size_t commuting = 0;
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = a; a + b <= 4; ++b) {
      const RelationSpec spec{true, true, false};
      RunManifest m;
      m.command = "check commutativity";
      const auto one = dump(m.attach(report_record(commutator_check(a, b, spec, Field::rational, SpaceShape::arc, 1))));
      const auto many = dump(m.attach(report_record(commutator_check(a, b, spec, Field::rational, SpaceShape::arc, 8))));
      out.require(one == many, "framed arc report differs across jobs at " + std::to_string(a) + "," + std::to_string(b));
      const std::string args = "check commutativity --space arc --framed --expect any --orders " +
                               std::to_string(a) + "," + std::to_string(b);
      const auto first = run_cli("--jobs 1 " + args);
      const auto second = run_cli("--jobs 8 " + args);
      out.require(first.status == 0 && first.out == second.out, "CLI framed arc report not reproducible");
      const json doc = json::parse(first.out);
      out.require(doc.at("manifest").at("result_digest") == digest_of(doc), "result digest does not verify");
      pairs += doc.at("counts").at("pairs").get<std::size_t>();
      commuting += doc.at("counts").at("commuting").get<std::size_t>();
    }
  }
  out.detail << " unframed circle commutes to total 5; framed arc report to total 4: " << commuting << "/"
             << pairs << " pairs commute (reported, not gated)";
}

void lemma(Outcome& out) {
  const SingleClassModel single;
  const HomologyTrivialModel trivial;
  std::size_t quadruples = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = lemma_4T_closure_check(n, SignSchema::uniform(), single, 4);
    out.require(r.violations.empty(), std::to_string(r.violations.size()) + " violations at n=" + std::to_string(n));
    quadruples += r.quadruples;
    const auto t = lemma_4T_closure_check(n, SignSchema::uniform(), trivial, 4);
    out.require(t.violations.empty(), "trivial mode not closed at n=" + std::to_string(n));
  }
  out.detail << " " << quadruples << " quadruples at n=2..4, none mixed";
}

void duality(Outcome& out) {
  struct Config {
    bool framed;
    bool one;
    SignSchema schema;
    Field field;
    std::shared_ptr<const RealisabilityModel> model;
  };
  const std::vector<Config> configs = {
      {false, false, SignSchema::uniform(), Field::rational, nullptr},
      {false, true, SignSchema::uniform(), Field::rational, nullptr},
      {true, false, SignSchema::uniform(), Field::rational, nullptr},
      {true, true, SignSchema::uniform(), Field::rational, nullptr},
      {true, true, SignSchema::from_flip_mask(0x00f), Field::rational, nullptr},
      {false, true, SignSchema::uniform(), Field::gf2, nullptr},
      {true, true, SignSchema::uniform(), Field::gf2, nullptr},
      {true, true, SignSchema::uniform(), Field::rational, std::make_shared<HomologyTrivialModel>()},
      {true, true, SignSchema::uniform(), Field::rational, std::make_shared<SingleClassModel>()},
  };
  std::size_t functionals = 0;
  for (const auto& c : configs) {
    const RelationSpec spec{c.framed, true, c.one, c.schema};
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto space = weight_space(n, spec, c.field, c.model);
      std::size_t expected = 0;
      if (c.model) {
        expected = restricted_quotient_dim(n, spec, *c.model, c.field).dimension;
      } else {
        expected = quotient_basis(n, c.framed, generate_relations(n, spec), c.field).dimension();
        if (c.schema == SignSchema::uniform()) {
          out.require(expected == oracle::quotient_dim(static_cast<int>(n), c.framed, true, c.one,
                                                       c.field == Field::gf2)
                                      .dim(),
                      "quotient disagrees with oracle for " + spec.describe());
        }
      }
      const std::string at = spec.describe() + " n=" + std::to_string(n);
      out.require(space.dimension() == expected, "dimension mismatch for " + at);
      for (const auto& f : space.functionals) {
        const auto r = validate(f, spec, c.field);
        out.require(r.passed(), "functional fails validation for " + at);
        ++functionals;
      }
    }
  }
  out.detail << " " << functionals << " functionals over " << configs.size() << " configurations";
}

void determinism(Outcome& out) {
  const auto dir = std::filesystem::temp_directory_path() / "chordspace-acceptance";
  std::filesystem::create_directories(dir);
  const auto table = dir / "table.json";
  {
    const auto w = run_cli("weights --order 3 --framed --relations 4t,1t --functional 0");
    std::ofstream(table) << w.out;
  }
  const std::vector<std::string> commands = {
      "enumerate --order 4 --framed --format json",
      "enumerate --order 3 --arc --format json",
      "dims --order 0,1,2,3,4,5 --format json",
      "dims --order 3 --framed --relations 4t,1t --schema mask-00f --format json",
      "dims --order 3 --framed --relations 4t,1t --model single-class --format json",
      "dims --order 3 --framed --field gf2 --format json",
      "relations --order 3 --framed --relations 4t,1t --format json",
      "relations --order 3 --arc --format json",
      "check phi-iso --schema-a uniform --schema-b mask-00f --order 3",
      "check phi-iso --schema-a uniform --schema-b uniform --order 3 --arc",
      "check well-defined --orders 2,3",
      "check well-defined --orders 2,2 --framed --relations 4t,1t --expect any",
      "check commutativity --orders 1,3 --space circle",
      "check commutativity --orders 2,2 --space arc --framed --expect any",
      "check lemma-4t --order 4 --model single-class",
      "check schema-search --orders 2,3 --expect any",
      "validate --table " + table.string() + " --relations 4t,1t",
      "weights --order 3 --framed --relations 4t,1t",
      "weights --order 3 --framed --relations 4t,1t --model single-class",
      "render 'ABCABC|010' --format dot",
      "render 'ABAB|01' --format tikz",
  };
  for (const auto& args : commands) {
    const auto one = run_cli("--cache-dir " + (dir / "c1").string() + " --jobs 1 " + args);
    const auto many = run_cli("--cache-dir " + (dir / "c8").string() + " --jobs 8 " + args);
    out.require(one.status == many.status && !one.out.empty() && one.out == many.out, "differs: " + args);
    if (args.rfind("render", 0) != 0 && !one.out.empty()) {
      try {
        const json doc = json::parse(one.out);
        out.require(doc.at("manifest").at("result_digest") == digest_of(doc), "digest does not verify: " + args);
      } catch (const std::exception&) {
        out.require(false, "not JSON: " + args);
      }
    }
  }
  std::filesystem::remove_all(dir);
  out.detail << " " << commands.size() << " commands byte-identical at --jobs 1 and --jobs 8";
}

void timed(Outcome& out, double limit, const std::function<void(Outcome&)>& body) {
  const auto start = Clock::now();
  body(out);
  const double seconds = since(start);
  out.require(seconds < limit, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit) + " s");
}

}  // namespace

int main() {
  criterion(1, "enumeration-oracle", [](Outcome& o) { timed(o, kEnumerationLimit, enumeration); });
  criterion(2, "unframed-dimensions", [](Outcome& o) { timed(o, kDimensionLimit, dimensions); });
  criterion(3, "phi-isomorphism", phi_isomorphism);
  criterion(4, "multiplication-well-defined", [](Outcome& o) { timed(o, kWellDefinedLimit, well_definedness); });
  criterion(5, "commutativity-evidence", commutativity);
  criterion(6, "realisability-lemma", [](Outcome& o) { timed(o, kLemmaLimit, lemma); });
  criterion(7, "weight-system-duality", duality);
  criterion(8, "cli-determinism", determinism);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

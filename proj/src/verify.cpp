#include <map>
#include <sstream>
#include <utility>

#include "cobweb/chains.hpp"

namespace cobweb {

std::string observation_id(Observation obs) {
  switch (obs) {
    case Observation::obs1:
      return "obs1";
    case Observation::obs2:
      return "obs2";
    case Observation::obs3:
      return "obs3";
  }
  return "unknown";
}

std::optional<Observation> parse_observation(std::string_view text) {
  if (text == "1" || text == "obs1") return Observation::obs1;
  if (text == "2" || text == "obs2") return Observation::obs2;
  if (text == "3" || text == "obs3") return Observation::obs3;
  return std::nullopt;
}

void VerificationReport::add(VerificationCase c) {
  if (!c.pass) {
    counterexamples_.push_back(c);
  }
  cases_.push_back(std::move(c));
}

namespace {

void sweep_obs1(VerificationReport& report, std::uint32_t max_n,
                const EnumerationOptions& options) {
  const CobwebPoset poset(max_n);
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    VerificationCase c;
    c.observation = Observation::obs1;
    c.k = 1;
    c.n = n;
    c.formula = count_from_root_formula(n);
    c.oracle = enumerate_from_root(poset, n, options);
    c.pass = c.formula == c.oracle;
    report.add(std::move(c));
  }
}

void sweep_obs2(VerificationReport& report, std::uint32_t max_n,
                const EnumerationOptions& options) {
  const CobwebPoset poset(max_n);
  for (std::uint32_t n = 2; n <= max_n; ++n) {
    for (std::uint32_t k = 1; k < n; ++k) {
      const BigCount formula = count_layer_chains_formula(k, n);
      for (std::uint64_t i = 0; i < poset.level_size(k); ++i) {
        VerificationCase c;
        c.observation = Observation::obs2;
        c.k = k;
        c.n = n;
        c.start = Vertex{k, i};
        c.formula = formula;
        c.oracle = enumerate_layer_chains(poset, LayerSpec{*c.start, n}, options);
        c.pass = c.formula == c.oracle;
        report.add(std::move(c));
      }
    }
  }
}

void sweep_obs3(VerificationReport& report, std::uint32_t max_n,
                const EnumerationOptions& options) {
  auto record = [&](std::uint32_t k, std::uint32_t n, CountMode mode) {
    const QuotientOutcome out = evaluate_quotient(k, n, mode, options);
    VerificationCase c;
    c.observation = Observation::obs3;
    c.k = k;
    c.n = n;
    c.mode = mode;
    c.formula = out.fibonomial;
    c.oracle = out.quotient;
    c.pass = out.holds();
    report.add(std::move(c));
  };
  for (std::uint32_t n = 2; n <= max_n; ++n) {
    for (std::uint32_t k = 1; k < n; ++k) {
      record(k, n, CountMode::enumerate);
    }
  }
  const std::uint32_t formula_max = 3 * max_n;
  for (std::uint32_t n = 2; n <= formula_max; ++n) {
    for (std::uint32_t k = 1; k < n; ++k) {
      record(k, n, CountMode::formula);
    }
  }
}

std::string mode_name(CountMode mode) {
  return mode == CountMode::formula ? "formula" : "enumerate";
}

void write_line(std::ostream& os, const VerificationCase& c, bool pass) {
  os << "observation=" << observation_id(c.observation) << " k=" << c.k
     << " n=" << c.n << " formula=" << to_decimal(c.formula)
     << " oracle=" << to_decimal(c.oracle)
     << " status=" << (pass ? "pass" : "fail");
}

}  // namespace

VerificationReport verify_observation(Observation obs, std::uint32_t max_n,
                                      const EnumerationOptions& options) {
  if (max_n == 0) {
    throw std::invalid_argument("verification needs max_n >= 1");
  }
  VerificationReport report(obs, max_n);
  switch (obs) {
    case Observation::obs1:
      sweep_obs1(report, max_n, options);
      break;
    case Observation::obs2:
      sweep_obs2(report, max_n, options);
      break;
    case Observation::obs3:
      sweep_obs3(report, max_n, options);
      break;
  }
  return report;
}

std::string to_structured(const VerificationReport& report) {
  std::ostringstream os;
  if (report.observation() == Observation::obs2) {
    // Fold the start vertices of each (k, n) into one line; failing starts
    // get their own line with a start= key.
    std::map<std::pair<std::uint32_t, std::uint32_t>,
             std::vector<const VerificationCase*>>
        groups;
    for (const auto& c : report.cases()) {
      groups[{c.n, c.k}].push_back(&c);
    }
    for (const auto& [key, members] : groups) {
      bool all_pass = true;
      for (const auto* c : members) {
        all_pass = all_pass && c->pass;
      }
      if (all_pass) {
        write_line(os, *members.front(), true);
        os << " starts=" << members.size() << '\n';
        continue;
      }
      for (const auto* c : members) {
        if (!c->pass) {
          write_line(os, *c, false);
          os << " start=" << vertex_name(*c->start) << '\n';
        }
      }
    }
  } else {
    for (const auto& c : report.cases()) {
      write_line(os, c, c.pass);
      if (c.mode) {
        os << " mode=" << mode_name(*c.mode);
      }
      os << '\n';
    }
  }
  os << "summary observation=" << observation_id(report.observation())
     << " max_n=" << report.max_n() << " cases=" << report.cases().size()
     << " counterexamples=" << report.counterexamples().size()
     << " status=" << (report.passed() ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace cobweb

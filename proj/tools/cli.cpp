// Copyright 2026 The omegamon Authors.
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

#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "omegamon/burnside.hpp"
#include "omegamon/corpus.hpp"
#include "omegamon/error.hpp"
#include "omegamon/green.hpp"
#include "omegamon/identity.hpp"
#include "omegamon/languages.hpp"
#include "omegamon/presentation.hpp"
#include "omegamon/provability.hpp"
#include "omegamon/pseudovariety.hpp"
#include "omegamon/regex.hpp"
#include "omegamon/syntactic.hpp"
#include "omegamon/words.hpp"

namespace omegamon::cli {

  namespace {

    using json  = nlohmann::ordered_json;
    using Clock = std::chrono::steady_clock;

    constexpr std::string_view order_convention
        = "u <= v iff every context x_y with xuy in L has xvy in L";

    // FNV-1a, for echoing inputs in reports.
    std::string fingerprint(std::string_view data) {
      std::uint64_t h = 1469598103934665603ULL;
      for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      std::ostringstream out;
      out << std::hex << std::setw(16) << std::setfill('0') << h;
      return out.str();
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw InvalidArgument("cannot open '" + path + "'");
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    double ms_since(Clock::time_point start) {
      return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    // Where a monoid comes from.  Exactly one of the flags may be given.
    struct SourceOptions {
      std::string regex;
      std::string alphabet;
      std::string dfa_file;
      bool        regex_l2 = false;
      std::string language;
      std::string monoid;
      std::string monoid_file;
      unsigned    n = 2;

      void add_to(CLI::App* app, bool with_n = true) {
        app->add_option("--regex", regex, "Regular expression");
        app->add_option("--alphabet", alphabet,
                        "Alphabet of --regex (default: letters of the pattern)");
        app->add_option("--dfa-file", dfa_file, "DFA text file");
        app->add_flag("--regex-L2", regex_l2, "The witness language L2 over abc");
        app->add_option("--language", language, "Builtin language: L2, Ln, power_or_long (uses --n)");
        app->add_option("--monoid", monoid,
                        "Builtin monoid (trivial, C<k>, ex0, ex1) or a monoid file");
        app->add_option("--monoid-file", monoid_file, "Monoid text file");
        if (with_n) {
          app->add_option("--n", n, "Exponent n")->check(CLI::PositiveNumber);
        }
      }

      std::size_t given() const {
        return static_cast<std::size_t>(!regex.empty()) + !dfa_file.empty() + regex_l2
               + !language.empty() + !monoid.empty() + !monoid_file.empty();
      }
    };

    struct Source {
      std::string                    description;
      json                           input;
      std::optional<SyntacticResult> synt;
      std::optional<FiniteMonoid>    plain;

      FiniteMonoid const& monoid() const {
        return synt ? synt->monoid() : *plain;
      }

      OrderedMonoid ordered() const {
        return synt ? synt->ordered : OrderedMonoid::trivially_ordered(*plain);
      }
    };

    Source from_language(Dfa const& dfa, std::string description, json input) {
      Source s;
      s.description = std::move(description);
      s.input       = std::move(input);
      s.synt        = syntactic_ordered_monoid(dfa);
      return s;
    }

    Source load_source(SourceOptions const& o) {
      if (o.given() != 1) {
        throw InvalidArgument(
            "give exactly one of --regex, --dfa-file, --regex-L2, --language, --monoid, "
            "--monoid-file");
      }
      if (!o.regex.empty()) {
        std::string const alphabet = o.alphabet.empty() ? pattern_letters(o.regex) : o.alphabet;
        return from_language(compile(o.regex, alphabet), "Synt(" + o.regex + ")",
                             json{{"regex", o.regex},
                                  {"alphabet", alphabet},
                                  {"hash", fingerprint(o.regex + "\n" + alphabet)}});
      }
      if (!o.dfa_file.empty()) {
        std::string const text = read_file(o.dfa_file);
        return from_language(from_dfa_text(text), "Synt(" + o.dfa_file + ")",
                             json{{"dfa_file", o.dfa_file}, {"hash", fingerprint(text)}});
      }
      if (o.regex_l2 || o.language == "L2") {
        return from_language(lang_L2(), "Synt(L2)", json{{"language", "L2"}});
      }
      if (o.language == "Ln") {
        return from_language(lang_Ln(o.n), "Synt(L" + std::to_string(o.n) + ")",
                             json{{"language", "Ln"}, {"n", o.n}});
      }
      if (o.language == "power_or_long") {
        return from_language(lang_power_or_long(o.n), "Synt(power_or_long, n=" + std::to_string(o.n) + ")",
                             json{{"language", "power_or_long"}, {"n", o.n}});
      }
      if (!o.language.empty()) {
        throw InvalidArgument("unknown language '" + o.language + "'");
      }
      Source s;
      std::string const name = o.monoid.empty() ? o.monoid_file : o.monoid;
      if (o.monoid == "trivial") {
        s.plain = FiniteMonoid::trivial();
      } else if (o.monoid.size() > 1 && o.monoid[0] == 'C'
                 && o.monoid.find_first_not_of("0123456789", 1) == std::string::npos) {
        s.plain = FiniteMonoid::cyclic_group(std::stoul(o.monoid.substr(1)));
      } else if (o.monoid == "ex0" || o.monoid == "ex1") {
        auto p  = o.monoid == "ex0" ? builder_monoid_0(o.n) : builder_monoid_1(o.n);
        s.plain = enumerate_presentation(p).monoid;
        s.input = json{{"monoid", o.monoid}, {"n", o.n}};
      } else {
        if (o.monoid_file.empty() && !std::filesystem::exists(o.monoid)) {
          throw InvalidArgument("'" + o.monoid
                                + "' is neither a builtin monoid nor a readable file");
        }
        std::string const text = read_file(name);
        s.plain                = from_monoid_text(text);
        s.input                = json{{"monoid_file", name}, {"hash", fingerprint(text)}};
      }
      if (s.input.is_null()) {
        s.input = json{{"monoid", o.monoid}};
      }
      s.description = name;
      return s;
    }

    json element_json(FiniteMonoid const& M, element_t s) {
      return json{{"index", s}, {"word", M.label(s)}};
    }

    json witness_json(FiniteMonoid const& M, Substitution const& w) {
      json out = json::object();
      for (std::size_t i = 0; i < w.variables.size(); ++i) {
        out[std::string(1, w.variables[i])] = element_json(M, w.values[i]);
      }
      return out;
    }

    json report_json(FiniteMonoid const& M, MembershipReport const& r) {
      json out{{"variety", variety_name(r.variety)},
               {"n", r.n},
               {"verdict", verdict_name(r.verdict)}};
      json cert = nullptr;
      if (!r.member()) {
        cert = json{{"reason", r.certificate}};
        if (r.identity) {
          cert["identity"] = r.identity->to_string();
          cert["witness"]  = witness_json(M, *r.witness);
          cert["lhs"]      = element_json(M, r.lhs_value);
          cert["rhs"]      = element_json(M, r.rhs_value);
        }
      }
      out["certificate"] = cert;
      out["millis"]      = r.millis;
      return out;
    }

    std::string verdict_cell(Verdict v) {
      switch (v) {
        case Verdict::member:
          return "yes";
        case Verdict::not_member:
          return "no";
        case Verdict::unsupported:
          return "unsup";
        case Verdict::budget_exceeded:
          return "budget";
      }
      return "?";
    }

    class Runner {
     public:
      Runner(std::ostream& out, std::ostream& err) : _out(out), _err(err) {}

      int run(std::vector<std::string> const& args);

     private:
      void emit(std::string const& command, json input, json results, std::optional<std::uint64_t> seed,
                Clock::time_point start) {
        if (_json) {
          json report{{"command", command},
                      {"version", OMEGAMON_VERSION},
                      {"inputs", std::move(input)},
                      {"seed", seed ? json(*seed) : json(nullptr)},
                      {"results", std::move(results)},
                      {"millis", ms_since(start)}};
          _out << report.dump(2) << '\n';
        } else {
          _out << _text.str();
        }
      }

      void synt();
      void check();
      void member();
      void survey();
      void provable();
      void present();
      void burnside();

      std::ostream&      _out;
      std::ostream&      _err;
      std::ostringstream _text;
      bool               _json = false;

      SourceOptions _source;
      bool          _order = false;
      std::string   _lhs;
      std::string   _rhs;
      bool          _leq             = false;
      bool          _override_budget = false;
      std::string   _variety;
      bool          _builtin_witnesses = false;
      std::size_t   _samples           = 0;
      std::uint64_t _seed              = 1;
      bool          _certificates      = false;
      std::string   _from;
      std::string   _to;
      std::size_t   _max_nodes = ProvabilityOptions{}.max_nodes;
      std::string   _builder;
      std::string   _file;
      std::string   _output;
      std::string   _gens;
      std::string   _word;
      bool          _enumerate = false;
    };

    void Runner::synt() {
      auto const   start = Clock::now();
      Source const src   = load_source(_source);
      if (!src.synt) {
        throw InvalidArgument("synt needs a language source (--regex, --dfa-file, ...)");
      }
      auto const&         S = *src.synt;
      FiniteMonoid const& M = S.monoid();
      auto const          G = green_data(M);
      std::size_t const   accepting
          = static_cast<std::size_t>(std::count(S.accept.begin(), S.accept.end(), true));
      auto const bg = membership(M, Variety::BG, 0);

      json letters = json::object();
      for (std::size_t i = 0; i < S.minimal.alphabet().size(); ++i) {
        letters[std::string(1, S.minimal.alphabet()[i])] = element_json(M, S.letter_map[i]);
      }
      json results{{"order_convention", order_convention},
                   {"minimal_dfa_states", S.minimal.state_count()},
                   {"size", M.size()},
                   {"idempotents", M.idempotents().size()},
                   {"green", {{"R", G.r_count}, {"L", G.l_count}, {"J", G.j_count}, {"H", G.h_count}}},
                   {"regular_j_classes", G.regular_j_class_count()},
                   {"letters", letters},
                   {"accepting_elements", accepting},
                   {"BG", bg.member()}};
      _text << "language: " << src.description << '\n'
            << "order: " << order_convention << '\n'
            << "minimal DFA states: " << S.minimal.state_count() << '\n'
            << "monoid size: " << M.size() << '\n'
            << "idempotents: " << M.idempotents().size() << '\n'
            << "green classes: R=" << G.r_count << " L=" << G.l_count << " J=" << G.j_count
            << " H=" << G.h_count << '\n'
            << "regular J-classes: " << G.regular_j_class_count() << '\n'
            << "letters:";
      for (std::size_t i = 0; i < S.minimal.alphabet().size(); ++i) {
        _text << ' ' << S.minimal.alphabet()[i] << "->" << S.letter_map[i];
      }
      _text << '\n'
            << "accepting elements: " << accepting << '\n'
            << "BG: " << (bg.member() ? "yes" : "no") << '\n';
      if (_order) {
        std::size_t const pairs = S.ordered.order().count();
        auto const        ineq
            = check_inequality(S.ordered, inequality("1", "x^" + std::to_string(_source.n)));
        results["order_pairs"]        = pairs;
        results["one_below_power"]    = {{"n", _source.n}, {"holds", ineq.holds}};
        if (!ineq.holds) {
          results["one_below_power"]["witness"] = witness_json(M, *ineq.witness);
        }
        _text << "order pairs: " << pairs << " (" << pairs - M.size() << " strict)\n"
              << "1 <= x^" << _source.n << ": " << (ineq.holds ? "true" : "false");
        if (!ineq.holds) {
          _text << " at " << ineq.witness->to_string(M);
        }
        _text << '\n';
      }
      emit("synt", src.input, std::move(results), std::nullopt, start);
    }

    void Runner::check() {
      auto const   start = Clock::now();
      Source const src   = load_source(_source);
      Pseudoidentity const id{parse_term(_lhs), parse_term(_rhs),
                              _leq ? Relation::less_equal : Relation::equal};
      CheckOptions options;
      options.override_budget   = _override_budget;
      FiniteMonoid const& M     = src.monoid();
      CheckResult const   result = _leq ? check_inequality(src.ordered(), id, {}, options)
                                        : check_identity(M, id, {}, options);
      json results{{"identity", id.to_string()},
                   {"monoid_size", M.size()},
                   {"holds", result.holds},
                   {"substitutions", result.substitutions}};
      if (_leq) {
        results["order_convention"] = order_convention;
      }
      _text << src.description << " (size " << M.size() << "): " << id.to_string() << '\n'
            << (result.holds ? "TRUE" : "FALSE") << '\n';
      if (!result.holds) {
        results["witness"] = witness_json(M, *result.witness);
        results["lhs"]     = element_json(M, result.lhs_value);
        results["rhs"]     = element_json(M, result.rhs_value);
        _text << "witness: " << result.witness->to_string(M) << '\n'
              << "lhs = " << M.label(result.lhs_value) << ", rhs = " << M.label(result.rhs_value)
              << '\n';
      }
      json input = src.input;
      input["lhs"] = _lhs;
      input["rhs"] = _rhs;
      emit("check", std::move(input), std::move(results), std::nullopt, start);
    }

    void Runner::member() {
      auto const start   = Clock::now();
      auto const variety = parse_variety(_variety);
      if (!variety) {
        throw InvalidArgument("unknown variety '" + _variety + "'");
      }
      Source const        src    = load_source(_source);
      FiniteMonoid const& M      = src.monoid();
      auto const          report = membership(M, *variety, _source.n);
      _text << src.description << " (size " << M.size() << ") in " << variety_name(*variety)
            << " (n=" << _source.n << "): " << verdict_name(report.verdict) << '\n';
      if (!report.member()) {
        _text << "certificate: " << report.certificate << '\n';
      }
      emit("member", src.input, report_json(M, report), std::nullopt, start);
    }

    void Runner::survey() {
      auto const start = Clock::now();
      unsigned const n = _source.n;
      std::vector<std::pair<std::string, FiniteMonoid>> rows;
      json                                              input = json::object();
      std::optional<std::uint64_t>                      seed;
      if (_builtin_witnesses) {
        rows.emplace_back("ex0", enumerate_presentation(builder_monoid_0(n)).monoid);
        rows.emplace_back("ex1", enumerate_presentation(builder_monoid_1(n)).monoid);
        if (n == 2) {
          rows.emplace_back("Synt(L2)", syntactic_ordered_monoid(lang_L2()).monoid());
        }
        rows.emplace_back("Synt((abcdbdc)*)",
                          syntactic_ordered_monoid(compile("(abcdbdc)*", "abcd")).monoid());
        input["builtin_witnesses"] = true;
      }
      if (_samples > 0) {
        seed        = _seed;
        auto corpus = transformation_corpus(_samples, _seed);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
          rows.emplace_back("random#" + std::to_string(i), std::move(corpus[i]));
        }
        input["samples"] = _samples;
      }
      if (_source.given() > 0) {
        Source src = load_source(_source);
        rows.emplace_back(src.description, src.monoid());
        input["source"] = src.input;
      }
      if (rows.empty()) {
        throw InvalidArgument("survey needs --builtin-witnesses, --samples or a monoid source");
      }
      input["n"] = n;

      json table = json::array();
      _text << std::left << std::setw(20) << "monoid" << std::setw(7) << "size";
      for (auto v : all_varieties()) {
        _text << std::setw(static_cast<int>(std::max<std::size_t>(variety_name(v).size(), 5) + 1))
              << variety_name(v);
      }
      _text << '\n';
      std::ostringstream certificates;
      for (auto const& [name, M] : rows) {
        auto const reports = omegamon::survey(M, n);
        json       row{{"monoid", name}, {"size", M.size()}, {"reports", json::array()}};
        _text << std::setw(20) << name << std::setw(7) << M.size();
        for (auto const& r : reports) {
          row["reports"].push_back(report_json(M, r));
          _text << std::setw(static_cast<int>(
                       std::max<std::size_t>(variety_name(r.variety).size(), 5) + 1))
                << verdict_cell(r.verdict);
          if (!r.member()) {
            certificates << name << ' ' << variety_name(r.variety) << ": " << r.certificate
                         << '\n';
          }
        }
        _text << '\n';
        table.push_back(std::move(row));
      }
      if (_certificates) {
        _text << certificates.str();
      }
      emit("survey", std::move(input), json{{"n", n}, {"rows", std::move(table)}}, seed, start);
    }

    void Runner::provable() {
      auto const start = Clock::now();
      unsigned const n = _source.n;
      std::string const from = _from == "1" ? "" : _from;
      std::string const to   = _to == "1" ? "" : _to;
      ProvabilityOptions options;
      options.max_nodes = _max_nodes;
      auto const result = provable_leq(from, to, n, options);
      json       results{{"from", from}, {"to", to}, {"n", n}, {"provable", result.provable},
                         {"explored", result.explored}};
      _text << (from.empty() ? "1" : from) << " <= " << (to.empty() ? "1" : to)
            << " from 1 <= x^" << n << ": ";
      if (result.provable) {
        json steps = json::array();
        _text << "provable in " << result.proof->steps.size() << " step(s)\n";
        std::string word = from;
        for (auto const& step : result.proof->steps) {
          word.insert(step.position, repeat(step.base, n));
          steps.push_back({{"position", step.position}, {"base", step.base}, {"result", word}});
          _text << "  insert (" << step.base << ")^" << n << " at " << step.position << ": "
                << word << '\n';
        }
        results["steps"] = std::move(steps);
      } else {
        results["reason"] = result.reason;
        _text << "not provable by insertions (" << result.reason << ")\n";
      }
      emit("provable", json{{"from", from}, {"to", to}, {"n", n}}, std::move(results),
           std::nullopt, start);
    }

    void Runner::present() {
      auto const   start = Clock::now();
      unsigned const n   = _source.n;
      Presentation p;
      json         input;
      if (!_file.empty() && !_builder.empty()) {
        throw InvalidArgument("give one of --builder and --file");
      }
      if (_builder == "ex0") {
        p     = builder_monoid_0(n);
        input = json{{"builder", "ex0"}, {"n", n}};
      } else if (_builder == "ex1") {
        p     = builder_monoid_1(n);
        input = json{{"builder", "ex1"}, {"n", n}};
      } else if (!_builder.empty()) {
        throw InvalidArgument("unknown builder '" + _builder + "' (use ex0 or ex1)");
      } else if (!_file.empty()) {
        std::string const text = read_file(_file);
        p                      = from_presentation_text(text);
        input                  = json{{"file", _file}, {"hash", fingerprint(text)}};
      } else {
        throw InvalidArgument("present needs --builder or --file");
      }
      auto const  P = enumerate_presentation(p);
      auto const& M = P.monoid;
      auto const  G = green_data(M);
      json        forms = json::array();
      for (element_t s = 0; s < M.size(); ++s) {
        forms.push_back(M.label(s));
      }
      json rules = json::array();
      for (auto const& [l, r] : P.rewriting.rules()) {
        rules.push_back(json::array({l.empty() ? "1" : l, r.empty() ? "1" : r}));
      }
      json results{{"presentation", to_presentation_text(p)},
                   {"size", M.size()},
                   {"zero", P.zero ? json(M.label(*P.zero)) : json(nullptr)},
                   {"elements", forms},
                   {"rules", rules},
                   {"idempotents", M.idempotents().size()},
                   {"regular_j_classes", G.regular_j_class_count()}};
      _text << to_presentation_text(p) << "size: " << M.size() << '\n'
            << "elements:";
      for (element_t s = 0; s < M.size(); ++s) {
        _text << ' ' << M.label(s);
      }
      _text << '\n'
            << "rewriting rules: " << P.rewriting.rules().size() << '\n'
            << "idempotents: " << M.idempotents().size() << '\n'
            << "regular J-classes: " << G.regular_j_class_count() << '\n';
      if (!_output.empty()) {
        std::ofstream out(_output);
        if (!out) {
          throw InvalidArgument("cannot write '" + _output + "'");
        }
        write_monoid(out, M);
        _text << "monoid written to " << _output << '\n';
      }
      emit("present", std::move(input), std::move(results), std::nullopt, start);
    }

    void Runner::burnside() {
      auto const           start = Clock::now();
      unsigned const       n     = _source.n;
      BurnsideOracle const B(_gens, n);
      json results{{"gens", _gens}, {"n", n}};
      json input{{"gens", _gens}, {"n", n}};
      if (!_word.empty() || !_enumerate) {
        std::string const word = _word == "1" ? "" : _word;
        auto const        e    = B.sigma(word);
        results["word"]        = word;
        results["normal_form"] = B.to_string(e);
        results["identity"]    = B.is_identity(e);
        input["word"]          = word;
        _text << "B(" << B.rank() << ", " << n << ") normal form: " << B.to_string(e) << '\n'
              << "identity: " << (B.is_identity(e) ? "yes" : "no") << '\n';
      }
      if (_enumerate) {
        auto const all    = B.enumerate();
        results["order"]  = all.size();
        _text << "|B(" << B.rank() << ", " << n << ")| = " << all.size() << '\n';
      }
      emit("burnside", std::move(input), std::move(results), std::nullopt, start);
    }

    int Runner::run(std::vector<std::string> const& args) {
      CLI::App app{"Finite ordered monoids, omega-terms and pseudovarieties", "omegamon"};
      app.set_version_flag("--version", std::string(OMEGAMON_VERSION));
      app.require_subcommand(1);
      app.fallthrough();
      app.add_flag("--json", _json, "Emit a JSON report");

      auto* synt_cmd = app.add_subcommand("synt", "Syntactic ordered monoid of a language");
      _source.add_to(synt_cmd);
      synt_cmd->add_flag("--order", _order, "Report the order and 1 <= x^n");

      auto* check_cmd = app.add_subcommand("check", "Check a pseudoidentity or inequality");
      _source.add_to(check_cmd);
      check_cmd->add_option("--lhs", _lhs, "Left-hand omega-term")->required();
      check_cmd->add_option("--rhs", _rhs, "Right-hand omega-term")->required();
      check_cmd->add_flag("--leq", _leq, "Check lhs <= rhs in the syntactic order");
      check_cmd->add_flag("--override-budget", _override_budget,
                          "Allow more than 10^9 substitutions");

      auto* member_cmd = app.add_subcommand("member", "Pseudovariety membership");
      _source.add_to(member_cmd);
      member_cmd->add_option("--variety", _variety, "J, A, Gn, BG, BGn_U, BGn_V, BGn_W (BGn), "
                                                    "EJn, BHn, J_malcev_Hn, J_semidirect_Hn")
          ->required();

      auto* survey_cmd = app.add_subcommand("survey", "All membership verdicts per monoid");
      _source.add_to(survey_cmd);
      survey_cmd->add_flag("--builtin-witnesses", _builtin_witnesses,
                           "Include the separating witness monoids");
      survey_cmd->add_option("--samples", _samples, "Number of random transformation monoids");
      survey_cmd->add_option("--seed", _seed, "Seed of the random corpus");
      survey_cmd->add_flag("--certificates", _certificates, "Print certificates");

      auto* provable_cmd = app.add_subcommand("provable", "Insertion provability of u <= v");
      provable_cmd->add_option("--n", _source.n, "Exponent n")->check(CLI::PositiveNumber);
      provable_cmd->add_option("--from", _from, "Source word u (\"\" or 1 for empty)")
          ->required();
      provable_cmd->add_option("--to", _to, "Target word v")->required();
      provable_cmd->add_option("--max-nodes", _max_nodes, "Search budget");

      auto* present_cmd = app.add_subcommand("present", "Enumerate a presentation");
      present_cmd->add_option("--builder", _builder, "ex0 or ex1");
      present_cmd->add_option("--file", _file, "Presentation text file");
      present_cmd->add_option("--n", _source.n, "Exponent n of the builders")
          ->check(CLI::PositiveNumber);
      present_cmd->add_option("--output", _output, "Write the monoid file here");

      auto* burnside_cmd = app.add_subcommand("burnside", "Free Burnside group normal forms");
      burnside_cmd->add_option("--n", _source.n, "Exponent (1, 2 or 3)");
      burnside_cmd->add_option("--gens", _gens, "Generator letters")->required();
      burnside_cmd->add_option("--word", _word, "Word over the generators");
      burnside_cmd->add_flag("--enumerate", _enumerate, "Enumerate the whole group");

      try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
      } catch (CLI::CallForHelp const&) {
        _out << app.help();
        return exit_ok;
      } catch (CLI::CallForVersion const&) {
        _out << OMEGAMON_VERSION << '\n';
        return exit_ok;
      } catch (CLI::ParseError const& e) {
        _err << "error: " << e.what() << '\n';
        return exit_usage;
      }

      try {
        if (synt_cmd->parsed()) {
          synt();
        } else if (check_cmd->parsed()) {
          check();
        } else if (member_cmd->parsed()) {
          member();
        } else if (survey_cmd->parsed()) {
          survey();
        } else if (provable_cmd->parsed()) {
          provable();
        } else if (present_cmd->parsed()) {
          present();
        } else if (burnside_cmd->parsed()) {
          burnside();
        }
      } catch (BudgetExceeded const& e) {
        _err << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
      } catch (Undecided const& e) {
        _err << "undecided: " << e.what() << '\n';
        return exit_budget;
      } catch (InvariantViolation const& e) {
        _err << "internal invariant violated: " << e.what() << '\n';
        return exit_invariant;
      } catch (Error const& e) {
        _err << "error: " << e.what() << '\n';
        return exit_usage;
      } catch (std::exception const& e) {
        _err << "internal error: " << e.what() << '\n';
        return exit_invariant;
      }
      return exit_ok;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    return Runner(out, err).run(args);
  }

}  // namespace omegamon::cli

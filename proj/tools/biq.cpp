#include "biq/classifier.hpp"
#include "biq/conjugation.hpp"
#include "biq/error.hpp"
#include "biq/gadgets.hpp"
#include "biq/io.hpp"
#include "biq/morphisms.hpp"
#include "biq/roots.hpp"
#include "biq/tits.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using biq::io::json;

enum Exit { Ok = 0, Usage = 1, Invalid = 2, Precondition = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw biq::ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

biq::Biquiver load_biquiver(const std::string& path) { return biq::parse_biquiver(read_file(path)); }

std::optional<biq::Biquiver> optional_biquiver(const std::string& path) {
  if (path.empty())
    return std::nullopt;
  return load_biquiver(path);
}

biq::MatrixRepresentation load_rep(const std::string& path, const std::optional<biq::Biquiver>& g) {
  return biq::io::parse_representation(read_file(path), g);
}

biq::CMatrix load_square(const std::string& path) {
  return biq::io::square_matrix_from_json(biq::io::parse_document(read_file(path), "matrix"), path);
}

json rep_type_json(const biq::Biquiver& g) {
  auto type = biq::classify::representation_type(g);
  json out;
  out["kind"] = std::string(to_string(type.kind));
  out["diagram"] = type.diagram ? json(type.diagram->name()) : json(nullptr);
  out["definiteness"] = std::string(to_string(biq::tits::definiteness(biq::tits::gram_matrix(g))));
  return out;
}

json vertices_json(const std::vector<biq::Vertex>& vs) {
  json out = json::array();
  for (auto v : vs)
    out.push_back(v + 1);
  return out;
}

json rationals_json(const std::vector<biq::Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs)
    out.push_back(biq::to_string(x));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biquiver representation toolkit"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indented JSON output");

  std::string graph_path, rep_path, other_path, cert_path, biquiver_path, matrix_path, p_path, q_path;
  std::vector<std::string> rep_paths;
  std::vector<int> z, dims;
  std::vector<std::string> cycle_ids;
  bool components = false;
  long long value = 1;
  int bound = -1;
  int vertex = 0;
  int trials = 8;
  std::uint64_t seed = 1;

  auto* classify = app.add_subcommand("classify", "Representation type of a biquiver");
  classify->add_option("biquiver", graph_path)->required();
  classify->add_flag("--components", components, "Classify each connected component");

  auto* tits = app.add_subcommand("tits", "Tits form analysis");
  tits->add_option("biquiver", graph_path)->required();
  tits->add_option("--z", z, "Vector to evaluate q at")->delimiter(',');

  auto* roots = app.add_subcommand("roots", "Nonnegative vectors with a given Tits form value");
  roots->add_option("biquiver", graph_path)->required();
  roots->add_option("--value", value)->required();
  roots->add_option("--bound", bound, "Coordinate cap (required unless the form is positive definite)");

  auto* conjugate = app.add_subcommand("conjugate", "Conjugation at a vertex");
  conjugate->add_option("biquiver", graph_path)->required();
  conjugate->add_option("--vertex", vertex, "1-based vertex")->required();
  conjugate->add_option("--rep", rep_path, "Representation to conjugate as well");

  auto* eliminate = app.add_subcommand("eliminate", "Plan conjugations removing all dashed arrows");
  eliminate->add_option("biquiver", graph_path)->required();

  auto* rep = app.add_subcommand("rep", "Matrix representations");
  rep->require_subcommand(1);
  rep->add_option("--biquiver", biquiver_path, "Biquiver file, if the representations do not embed one");

  auto* validate = rep->add_subcommand("validate", "Check a representation, optionally an isomorphism certificate");
  validate->add_option("rep", rep_path)->required();
  validate->add_option("--against", other_path, "Target representation B");
  validate->add_option("--certificate", cert_path, "Certificate S with apply(A, S) == B");

  auto* sum = rep->add_subcommand("sum", "Direct sum");
  sum->add_option("reps", rep_paths)->required()->expected(1, -1);

  auto* random = rep->add_subcommand("random", "Random representation");
  random->add_option("--dims", dims)->required()->delimiter(',');
  random->add_option("--bound", bound, "Entry bound");
  random->add_option("--seed", seed);

  auto* hom = rep->add_subcommand("hom", "Real basis of Hom(A, B)");
  hom->add_option("a", rep_path)->required();
  hom->add_option("b", other_path)->required();

  auto* iso = rep->add_subcommand("iso", "Isomorphism test");
  iso->add_option("a", rep_path)->required();
  iso->add_option("b", other_path)->required();
  iso->add_option("--trials", trials);
  iso->add_option("--seed", seed);
  iso->add_option("--bound", bound, "Coefficient bound for random morphisms");

  auto* decompose = rep->add_subcommand("decompose", "Krull-Schmidt decomposition");
  decompose->add_option("rep", rep_path)->required();
  decompose->add_option("--trials", trials);
  decompose->add_option("--seed", seed);
  decompose->add_option("--bound", bound, "Coefficient bound for random endomorphisms");

  auto* gadget = app.add_subcommand("gadget", "Gadget representations");
  gadget->require_subcommand(1);
  auto* gcycle = gadget->add_subcommand("cycle", "Cycle gadget: identities along a cycle, M on its last arrow");
  gcycle->add_option("biquiver", graph_path)->required();
  gcycle->add_option("--cycle", cycle_ids, "Arrow ids in cycle order")->delimiter(',');
  gcycle->add_option("--matrix", matrix_path)->required();
  std::vector<CLI::App*> pair_gadgets;
  for (const char* name : {"g1", "g2", "g3", "g4"}) {
    auto* sub = gadget->add_subcommand(name, std::string("Pair gadget on ") + name);
    sub->add_option("--p", p_path)->required();
    sub->add_option("--q", q_path)->required();
    pair_gadgets.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  }

  biq::SearchOptions options;
  options.trials = trials;
  options.seed = seed;
  if (bound > 0)
    options.coeff_bound = bound;

  json out;
  try {
    if (*classify) {
      auto g = load_biquiver(graph_path);
      if (components) {
        out["components"] = json::array();
        for (const auto& c : biq::connected_components(g)) {
          json item = rep_type_json(c.graph);
          item["vertices"] = vertices_json(c.vertices);
          out["components"].push_back(std::move(item));
        }
      } else {
        if (!biq::is_connected(g))
          throw biq::PreconditionError("biquiver is not connected (use --components)");
        out = rep_type_json(g);
      }
    } else if (*tits) {
      auto g = load_biquiver(graph_path);
      auto gram = biq::tits::gram_matrix(g);
      json rows = json::array();
      for (int i = 0; i < gram.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < gram.size(); ++j)
          row.push_back(biq::to_string(gram(i, j)));
        rows.push_back(std::move(row));
      }
      out["gram"] = std::move(rows);
      out["characteristic_polynomial"] = rationals_json(biq::tits::characteristic_polynomial(gram));
      out["definiteness"] = std::string(to_string(biq::tits::definiteness(gram)));
      auto radical = biq::tits::radical_vector(gram);
      out["radical_vector"] = radical ? json(*radical) : json(nullptr);
      if (!z.empty())
        out["value"] = biq::tits::evaluate(g, z);
    } else if (*roots) {
      auto g = load_biquiver(graph_path);
      std::optional<int> cap;
      if (bound >= 0)
        cap = bound;
      out = json::array();
      for (const auto& r : biq::roots::roots_with_value(g, value, cap))
        out.push_back(r);
    } else if (*conjugate) {
      auto g = load_biquiver(graph_path);
      const biq::Vertex u = vertex - 1;
      out["biquiver"] = biq::io::biquiver_to_json(biq::conjugation::conjugate_biquiver(g, u));
      if (!rep_path.empty())
        out["representation"] =
            biq::io::representation_to_json(biq::conjugation::conjugate_representation(load_rep(rep_path, g), u), false);
    } else if (*eliminate) {
      auto g = load_biquiver(graph_path);
      auto result = biq::conjugation::dash_elimination_plan(g);
      if (auto* plan = std::get_if<biq::conjugation::ConjugationPlan>(&result)) {
        out["possible"] = true;
        out["vertices"] = vertices_json({plan->vertices.begin(), plan->vertices.end()});
        out["biquiver"] = biq::io::biquiver_to_json(biq::conjugation::apply_plan(g, *plan));
      } else {
        out["possible"] = false;
        out["reason"] = std::get<biq::conjugation::Impossible>(result).reason;
      }
    } else if (*rep) {
      const auto given = optional_biquiver(biquiver_path);
      if (*validate) {
        auto a = load_rep(rep_path, given);
        out["valid"] = true;
        out["dims"] = a.dims();
        out["total_dimension"] = a.total_dimension();
        if (!other_path.empty() || !cert_path.empty()) {
          if (other_path.empty() || cert_path.empty())
            throw biq::ValidationError("--against and --certificate go together");
          auto b = load_rep(other_path, a.biquiver());
          json doc = biq::io::parse_document(read_file(cert_path), "certificate");
          if (doc.is_object() && doc.contains("certificate"))
            doc = doc["certificate"];
          auto s = biq::io::base_change_from_json(doc, a.dims());
          out["certificate_verified"] = biq::verify_isomorphism(a, b, s);
        }
      } else if (*sum) {
        std::optional<biq::MatrixRepresentation> acc;
        for (const auto& path : rep_paths) {
          auto part = load_rep(path, acc ? std::optional(acc->biquiver()) : given);
          acc = acc ? biq::direct_sum(*acc, part) : part;
        }
        out = biq::io::representation_to_json(*acc, true);
      } else if (*random) {
        if (!given)
          throw biq::ValidationError("rep random needs --biquiver");
        out = biq::io::representation_to_json(
            biq::random_representation(*given, dims, bound > 0 ? bound : 5, seed), true);
      } else if (*hom) {
        auto a = load_rep(rep_path, given);
        auto b = load_rep(other_path, a.biquiver());
        auto basis = biq::hom_basis(a, b);
        out["dimension"] = basis.dimension();
        out["basis"] = json::array();
        for (const auto& f : basis.basis())
          out["basis"].push_back(biq::io::base_change_to_json(f));
      } else if (*iso) {
        auto a = load_rep(rep_path, given);
        auto b = load_rep(other_path, a.biquiver());
        out = biq::io::iso_result_to_json(biq::are_isomorphic(a, b, options));
        out["seed"] = seed;
      } else if (*decompose) {
        auto a = load_rep(rep_path, given);
        auto d = biq::decompose(a, options);
        out = biq::io::decomposition_to_json(d);
        out["verified"] = biq::verify_decomposition(a, d);
        out["trials"] = options.trials;
        out["bound"] = options.coeff_bound;
        out["seed"] = seed;
      }
    } else if (*gadget) {
      if (*gcycle) {
        auto g = load_biquiver(graph_path);
        auto m = load_square(matrix_path);
        auto r = cycle_ids.empty() ? biq::gadgets::cycle(g, m) : biq::gadgets::cycle(g, cycle_ids, m);
        out = biq::io::representation_to_json(r, true);
      } else {
        const biq::gadgets::Which which[] = {biq::gadgets::Which::G1, biq::gadgets::Which::G2,
                                             biq::gadgets::Which::G3, biq::gadgets::Which::G4};
        for (std::size_t k = 0; k < pair_gadgets.size(); ++k) {
          if (!*pair_gadgets[k])
            continue;
          auto p = load_square(p_path);
          auto q = load_square(q_path);
          auto r = k < 2 ? biq::gadgets::companion(which[k], p, q) : biq::gadgets::shift(which[k], p, q);
          out = biq::io::representation_to_json(r, true);
        }
      }
    }
  } catch (const biq::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return Precondition;
  } catch (const biq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return Invalid;
  } catch (const biq::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return Invalid;
  }

  std::cout << out.dump(pretty ? 2 : -1) << "\n";
  return Ok;
}

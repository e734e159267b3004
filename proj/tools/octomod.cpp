#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "octomod/json_io.hpp"
#include "octomod/suites.hpp"

namespace {

using octomod::json;

struct Ctx {
  std::string element;
  std::string json_file;
  std::string sig;
  std::string sig2;
  std::string mode = "left";
  std::string out;
  std::string arg0, arg1, arg2;

  std::vector<std::string> args;
  void collect_args() {
    args.clear();
    for (const std::string* s : {&arg0, &arg1, &arg2})
      if (!s->empty()) args.push_back(*s);
  }
};

json parse_json_text(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw octomod::DomainError(octomod::ErrorCode::ParseError,
                               std::string("malformed JSON for ") + what);
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw octomod::DomainError(octomod::ErrorCode::ParseError, "cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.c_str());
}

octomod::ModuleSignature parse_sig(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw octomod::DomainError(octomod::ErrorCode::ParseError, "--sig expects n,m");
  try {
    const int n = std::stoi(text.substr(0, comma));
    const int m = std::stoi(text.substr(comma + 1));
    return octomod::ModuleSignature(n, m);
  } catch (const std::invalid_argument&) {
    throw octomod::DomainError(octomod::ErrorCode::ParseError, "--sig expects integers n,m");
  } catch (const std::out_of_range&) {
    throw octomod::DomainError(octomod::ErrorCode::ParseError, "--sig out of range");
  }
}

octomod::ModuleElement get_element(const Ctx& ctx) {
  if (!ctx.element.empty())
    return octomod::element_from_json(parse_json_text(ctx.element, "--element"));
  if (!ctx.json_file.empty()) return octomod::element_from_json(load_json_file(ctx.json_file));
  throw octomod::DomainError(octomod::ErrorCode::ParseError,
                             "an element is required (--element or --json)");
}

json get_payload(const Ctx& ctx, size_t index, const char* what) {
  if (ctx.args.size() > index) return parse_json_text(ctx.args[index], what);
  if (!ctx.json_file.empty()) return load_json_file(ctx.json_file);
  throw octomod::DomainError(octomod::ErrorCode::ParseError,
                             std::string(what) + " required (positional JSON or --json)");
}

octomod::Octonion get_octonion(const Ctx& ctx, size_t index) {
  if (ctx.args.size() <= index)
    throw octomod::DomainError(octomod::ErrorCode::ParseError, "missing octonion argument");
  return octomod::octonion_from_json(parse_json_text(ctx.args[index], "octonion"));
}

void emit(const json& j, const Ctx& ctx) {
  if (ctx.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(ctx.out);
    if (!out)
      throw octomod::DomainError(octomod::ErrorCode::ParseError, "cannot write " + ctx.out);
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octomod: exact octonion-module computations"};
  app.require_subcommand(1);

  Ctx ctx;
  int exit_code = 0;
  std::function<void()> action;

  auto make = [&](const std::string& name, const std::string& desc, bool positionals = false) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--element", ctx.element, "module element as inline JSON");
    sub->add_option("--sig", ctx.sig, "signature n,m");
    sub->add_option("--sig2", ctx.sig2, "second signature n,m (hom-dim)");
    sub->add_option("--mode", ctx.mode, "hom mode: left, right or bi");
    sub->add_option("--json", ctx.json_file, "read JSON payload from a file");
    sub->add_option("--out", ctx.out, "write output JSON to a file");
    if (positionals) {
      // Plain string positionals: bracketed JSON must not be split.
      sub->add_option("arg0", ctx.arg0, "positional JSON payload");
      sub->add_option("arg1", ctx.arg1, "positional JSON payload");
      sub->add_option("arg2", ctx.arg2, "positional JSON payload");
    }
    return sub;
  };

  using namespace octomod;

  make("mul", "product of two octonions", true)->callback([&] {
    action = [&] { emit(to_json(mul(get_octonion(ctx, 0), get_octonion(ctx, 1))), ctx); };
  });
  make("conj", "octonion conjugate", true)->callback([&] {
    action = [&] { emit(to_json(conj(get_octonion(ctx, 0))), ctx); };
  });
  make("inverse", "octonion inverse", true)->callback([&] {
    action = [&] { emit(to_json(inverse(get_octonion(ctx, 0))), ctx); };
  });
  make("associator", "[x,y,z] = (xy)z - x(yz)", true)->callback([&] {
    action = [&] {
      emit(to_json(associator(get_octonion(ctx, 0), get_octonion(ctx, 1), get_octonion(ctx, 2))),
           ctx);
    };
  });
  make("cross", "Im(uv) for imaginary u, v", true)->callback([&] {
    action = [&] { emit(to_json(cross(get_octonion(ctx, 0), get_octonion(ctx, 1))), ctx); };
  });
  make("assoc-subspace", "basis of Lambda(u,v)", true)->callback([&] {
    action = [&] {
      emit(to_json(assoc_subspace(get_octonion(ctx, 0), get_octonion(ctx, 1))), ctx);
    };
  });
  make("verify-identities", "exhaustive epsilon contraction identity checks")->callback([&] {
    action = [&] { emit(to_json(verify_contraction_identities()), ctx); };
  });
  make("left-mul", "left action p . x", true)->callback([&] {
    action = [&] { emit(to_json(left_mul(get_octonion(ctx, 0), get_element(ctx))), ctx); };
  });
  make("associative-part", "A(M) and A-(M) for a signature")->callback([&] {
    action = [&] {
      const ModuleSignature s = parse_sig(ctx.sig);
      emit(json{{"associative_part", to_json(associative_part(s))},
                {"conjugate_associative_part", to_json(conjugate_associative_part(s))}},
           ctx);
    };
  });
  make("closure", "submodule generated by an element")->callback([&] {
    action = [&] { emit(to_json(submodule_closure(get_element(ctx))), ctx); };
  });
  make("is-cyclic", "whether dim<x> = 8, with its class")->callback([&] {
    action = [&] {
      const ModuleElement x = get_element(ctx);
      const auto cls = cyclic_class(x);
      json out{{"cyclic", cls.has_value()}};
      if (cls)
        out["class"] = *cls == CyclicClass::Plus ? "C+" : "C-";
      else
        out["class"] = nullptr;
      emit(out, ctx);
    };
  });
  make("re-part", "real-part projector on a bimodule element")->callback([&] {
    action = [&] { emit(to_json(re_part(BimoduleElement(get_element(ctx)))), ctx); };
  });
  make("peirce", "coordinates over Re M + sum e_i Re M")->callback([&] {
    action = [&] {
      const auto parts = peirce_decompose(BimoduleElement(get_element(ctx)));
      json arr = json::array();
      for (const auto& p : parts) arr.push_back(to_json(p.element()));
      emit(json{{"parts", arr}}, ctx);
    };
  });
  make("right-mul", "derived right action x . p", true)->callback([&] {
    action = [&] {
      emit(to_json(right_mul(BimoduleElement(get_element(ctx)), get_octonion(ctx, 0))), ctx);
    };
  });
  make("canonical-bimodule", "slotwise right multiplication on O^n")->callback([&] {
    action = [&] { emit(to_json(canonical_bimodule(parse_sig(ctx.sig))), ctx); };
  });
  make("verify-bimodule", "check a candidate right action", true)->callback([&] {
    action = [&] {
      emit(to_json(verify_bimodule(candidate_from_json(get_payload(ctx, 0, "candidate")))), ctx);
    };
  });
  make("solve-bimodule", "search compatible right actions for a signature")->callback([&] {
    action = [&] {
      emit(to_json(impose_quadratic(solve_linear_stage(parse_sig(ctx.sig)))), ctx);
    };
  });
  make("admits-bimodule", "whether a signature carries a bimodule structure")->callback([&] {
    action = [&] { emit(json{{"admits", admits_bimodule(parse_sig(ctx.sig))}}, ctx); };
  });
  make("hom-dim", "dimension of the intertwiner space")->callback([&] {
    action = [&] {
      HomMode mode = HomMode::Left;
      if (ctx.mode == "right")
        mode = HomMode::Right;
      else if (ctx.mode == "bi")
        mode = HomMode::Bi;
      else if (ctx.mode != "left")
        throw DomainError(ErrorCode::ParseError, "--mode must be left, right or bi");
      emit(json{{"dim", hom_space_dim(parse_sig(ctx.sig), parse_sig(ctx.sig2), mode)}}, ctx);
    };
  });
  make("classify-almost-linear", "recover q with f(x) = xq when possible", true)->callback([&] {
    action = [&] {
      const Mat f = square_matrix_from_json(get_payload(ctx, 0, "matrix"));
      const auto q = classify_almost_linear(f);
      json out{{"is_right_multiplication", q.has_value()}};
      out["q"] = q ? to_json(*q) : json(nullptr);
      emit(out, ctx);
    };
  });
  make("decompose", "cyclic decomposition of a bimodule element")->callback([&] {
    action = [&] { emit(to_json(decompose(BimoduleElement(get_element(ctx)))), ctx); };
  });
  make("length", "term count of the cyclic decomposition")->callback([&] {
    action = [&] {
      emit(json{{"length", length(BimoduleElement(get_element(ctx)))}}, ctx);
    };
  });
  make("generated-submodule", "<m> as a direct sum over a decomposition")->callback([&] {
    action = [&] {
      emit(to_json(generated_submodule(BimoduleElement(get_element(ctx)))), ctx);
    };
  });
  make("sigma-class", "projective class of the characteristic root")->callback([&] {
    action = [&] { emit(to_json(sigma_class(BimoduleElement(get_element(ctx)))), ctx); };
  });
  make("commutes", "whether O m = m O")->callback([&] {
    action = [&] {
      emit(json{{"commutes", commutes_with_octonions(BimoduleElement(get_element(ctx)))}}, ctx);
    };
  });
  make("suite", "run a named verification suite", true)->callback([&] {
    action = [&] {
      if (ctx.args.empty())
        throw DomainError(ErrorCode::UnknownSuite, "suite name required");
      const SuiteReport rep = run_suite(ctx.args[0]);
      json lines = json::array();
      for (const auto& l : rep.lines)
        lines.push_back(json{{"label", l.label}, {"pass", l.pass}, {"detail", l.detail}});
      emit(json{{"suite", rep.suite}, {"pass", rep.all_pass()}, {"lines", lines}}, ctx);
      if (!rep.all_pass()) exit_code = 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ctx.collect_args();
    if (action) action();
  } catch (const octomod::DomainError& e) {
    json err{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return exit_code;
}

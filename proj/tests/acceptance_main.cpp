// Acceptance gate: one line per criterion, [PASS] or [FAIL] with timing.
// Exits nonzero if anything fails.

#include <symweb/symweb.hpp>

#include "kauffman_oracle.hpp"
#include "random_webs.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sys/wait.h>

using namespace symweb;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %2d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(), secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

LaurentHalf signed_dim(int k) {
  LaurentHalf v = qint(k + 1);
  if (k % 2 != 0) v = -v;
  return v;
}

WebMorphism closed_loop(int k) {
  WebWord w = WebWord::identity(WebObject::empty());
  w.append(0, Generator::cup(k));
  w.append(0, Generator::cap(k));
  return WebMorphism::of_word(std::move(w));
}

bool relation_ok(const std::string& rule, const Params& params, std::string& detail) {
  const CheckReport rep = check_relation(rule, params);
  if (!rep.ok && detail.empty()) {
    detail = rule;
    for (const auto& [n, v] : params) detail += " " + n + "=" + std::to_string(v);
  }
  return rep.ok;
}

}  // namespace

int main() {
  criterion(1, "closed loops of thickness 1..8 evaluate to (-1)^k [k+1] in under 1 s", [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int k = 1; k <= 8; ++k)
      if (eval_closed(closed_loop(k)) != signed_dim(k)) {
        ok = false;
        detail = "k=" + std::to_string(k);
      }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 1.0) {
      ok = false;
      detail = "too slow";
    }
    return ok;
  });

  criterion(2, "lollipops vanish exactly", [](std::string& detail) {
    bool ok = true;
    for (int k = 1; k <= 2; ++k) {
      WebWord up = WebWord::identity(WebObject::of({2 * k}));
      up.append(0, Generator::split(k, k));
      up.append(0, Generator::cap(k));
      if (!eval(up).is_zero()) ok = false;
      WebWord down = WebWord::identity(WebObject::empty());
      down.append(0, Generator::cup(k));
      down.append(0, Generator::merge(k, k));
      if (!eval(down).is_zero()) ok = false;
      if (!ok && detail.empty()) detail = "k=" + std::to_string(k);
    }
    return ok;
  });

  criterion(3, "dumbbell expansion as an exact 4x4 identity", [](std::string&) {
    const WebObject two = WebObject::of({1, 1});
    WebWord sm = WebWord::identity(two);
    sm.append(0, Generator::merge(1, 1));
    sm.append(0, Generator::split(1, 1));
    WebWord cap = WebWord::identity(two);
    cap.append(0, Generator::cap(1));
    WebWord cup = WebWord::identity(WebObject::empty());
    cup.append(0, Generator::cup(1));
    const IntertwinerMatrix rhs =
        IntertwinerMatrix::identity(two).scaled(LaurentFrac(qint(2))) + eval(cup) * eval(cap);
    return eval(sm) == rhs;
  });

  criterion(4, "digon removal for all thicknesses k+l <= 6", [](std::string& detail) {
    bool ok = true;
    for (int k = 1; k <= 5; ++k)
      for (int l = 1; k + l <= 6; ++l) {
        WebWord w = WebWord::identity(WebObject::of({k + l}));
        w.append(0, Generator::split(k, l));
        w.append(0, Generator::merge(k, l));
        const IntertwinerMatrix expect = IntertwinerMatrix::identity(WebObject::of({k + l}))
                                             .scaled(LaurentFrac(qbinom(k + l, l)));
        if (eval(w) != expect) {
          ok = false;
          detail = "k=" + std::to_string(k) + " l=" + std::to_string(l);
        }
      }
    return ok;
  });

  criterion(5, "square switch with j1, j2 <= 2 on weights up to (4,4), including EF-FE = [k-l]",
            [](std::string& detail) {
    bool ok = true;
    for (int k = 0; k <= 4; ++k)
      for (int l = 0; l <= 4; ++l) {
        for (int j1 = 0; j1 <= 2; ++j1)
          for (int j2 = 0; j2 <= 2; ++j2)
            ok = relation_ok("square_switch",
                             {{"k", k}, {"l", l}, {"j1", j1}, {"j2", j2}}, detail) && ok;
        if (k + l >= 1) ok = relation_ok("ef_fe", {{"k", k}, {"l", l}}, detail) && ok;
      }
    return ok;
  });

  criterion(6, "frobenius, snake and vertex slides up to thickness 4", [](std::string& detail) {
    bool ok = true;
    for (int h = 1; h <= 2; ++h)
      for (int k = 1; h + k <= 3; ++k)
        for (int l = 1; h + k + l <= 4; ++l)
          for (int dir = 0; dir <= 1; ++dir)
            ok = relation_ok("frobenius", {{"h", h}, {"k", k}, {"l", l}, {"dir", dir}}, detail) &&
                 ok;
    for (int k = 1; k <= 4; ++k)
      for (int side = 0; side <= 1; ++side)
        ok = relation_ok("snake", {{"k", k}, {"side", side}}, detail) && ok;
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; k + l <= 4; ++l)
        for (int flip = 0; flip <= 1; ++flip) {
          ok = relation_ok("vertex_slide_split", {{"k", k}, {"l", l}, {"flip", flip}}, detail) &&
               ok;
          ok = relation_ok("vertex_slide_merge", {{"k", k}, {"l", l}, {"flip", flip}}, detail) &&
               ok;
        }
    return ok;
  });

  criterion(7, "projectors up to 5 strands: word = recursion, idempotent, hook-killed, under 30 s",
            [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int k = 1; k <= 5; ++k) {
      const JwReport rep = verify_jw(k);
      if (!rep.ok()) {
        ok = false;
        detail = "k=" + std::to_string(k);
      }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 30.0) {
      ok = false;
      detail = "too slow";
    }
    return ok;
  });

  criterion(8, "inverse crossings cancel (colours <= 3) and the braid relation holds (colours <= 2)",
            [](std::string& detail) {
    bool ok = true;
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l) {
        const IntertwinerMatrix id_kl = IntertwinerMatrix::identity(WebObject::of({k, l}));
        if (eval(compose(crossing(l, k, -1), crossing(k, l, +1))) != id_kl ||
            eval(compose(crossing(l, k, +1), crossing(k, l, -1))) != id_kl) {
          ok = false;
          detail = "R2 k=" + std::to_string(k) + " l=" + std::to_string(l);
        }
      }
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c) {
          const std::vector<int> colors{a, b, c};
          const WebMorphism lhs =
              braid_to_morphism(ColoredBraidWord::parse(colors, "s1 s2 s1"));
          const WebMorphism rhs =
              braid_to_morphism(ColoredBraidWord::parse(colors, "s2 s1 s2"));
          if (eval(lhs) != eval(rhs)) {
            ok = false;
            detail = "R3 " + std::to_string(a) + std::to_string(b) + std::to_string(c);
          }
        }
    return ok;
  });

  criterion(9, "thin crossing matches the bracket form and satisfies its quadratic relation",
            [](std::string&) {
    const WebObject two = WebObject::of({1, 1});
    const IntertwinerMatrix M = eval(crossing(1, 1, +1));
    WebWord hook = WebWord::identity(two);
    hook.append(0, Generator::cap(1));
    hook.append(0, Generator::cup(1));
    const IntertwinerMatrix bracket =
        IntertwinerMatrix::identity(two).scaled(LaurentFrac(LaurentHalf::monomial(1))) +
        eval(hook).scaled(LaurentFrac(LaurentHalf::monomial(-1)));
    if (M != bracket) return false;
    const IntertwinerMatrix left =
        M + IntertwinerMatrix::identity(two).scaled(LaurentFrac(LaurentHalf::monomial(1, -1)));
    const IntertwinerMatrix right =
        M + IntertwinerMatrix::identity(two).scaled(LaurentFrac(LaurentHalf::monomial(-3)));
    return (left * right).is_zero();
  });

  criterion(10, "command line Hopf link output is exact", [](std::string& detail) {
    const char* bin = std::getenv("SYMWEB_CLI");
    if (!bin) {
      detail = "SYMWEB_CLI not set";
      return false;
    }
    const std::string cmd =
        std::string("\"") + bin + "\" jones --colors 1,1 --word \"s1 s1\" --mode paper 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
      detail = "popen failed";
      return false;
    }
    std::string out;
    char buf[512];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      detail = "exit code " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
      return false;
    }
    if (out != "1 + q^-2 + q^-4 + q^-6\n") {
      detail = "got '" + out + "'";
      return false;
    }
    return true;
  });

  criterion(11, "trefoil and figure-eight match the independent bracket state sum",
            [](std::string& detail) {
    bool ok = true;
    const std::vector<std::pair<std::vector<int>, std::string>> cases{
        {{1, 1}, "s1 s1 s1"}, {{1, 1, 1}, "s1 S2 s1 S2"}};
    for (const auto& [colors, word] : cases) {
      const ColoredBraidWord b = ColoredBraidWord::parse(colors, word);
      if (colored_jones(b, NormalizationMode::paper) !=
          oracle::kauffman_bracket_closure(b.strands, b.letters)) {
        ok = false;
        detail = word;
      }
    }
    return ok;
  });

  criterion(12, "simplifier preserves 200 random closed webs exactly in under 60 s",
            [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(424243);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
      const WebWord w = testutil::random_closed_word(rng, 3, 10);
      const WebMorphism before = WebMorphism::of_word(w);
      const SimplifyResult res = simplify(before);
      if (eval_closed(res.morphism) != eval_closed(before)) {
        ok = false;
        detail = "trial " + std::to_string(trial) + ": " + w.str();
      }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60.0) {
      ok = false;
      detail = "too slow";
    }
    return ok;
  });

  criterion(13, "coloured unknots up to 6 and the (1,2) Hopf link against its projector cabling",
            [](std::string& detail) {
    bool ok = true;
    for (int c = 1; c <= 6; ++c) {
      const ColoredBraidWord unknot = ColoredBraidWord::parse({c}, "");
      if (colored_jones(unknot, NormalizationMode::framed) != signed_dim(c)) {
        ok = false;
        detail = "unknot c=" + std::to_string(c);
      }
    }
    const LaurentHalf direct = colored_jones(ColoredBraidWord::parse({1, 2}, "s1 s1"),
                                             NormalizationMode::framed);
    const TLLinear jw2 =
        TLLinear::identity(2) +
        TLLinear::of(TLDiagram::hook(2, 1), LaurentFrac::inverse_of(qint(2)));
    const WebMorphism cable =
        braid_to_morphism(ColoredBraidWord::parse({1, 1, 1}, "s1 s2 s2 s1"));
    const WebMorphism inserted =
        compose(cable, tensor(WebMorphism::identity(WebObject::of({1})), tl_embed(jw2)));
    if (trace_closure(inserted) != direct) {
      ok = false;
      detail = "cabled Hopf";
    }
    return ok;
  });

  std::printf("%d of 13 criteria passed\n", 13 - failures);
  return failures == 0 ? 0 : 1;
}

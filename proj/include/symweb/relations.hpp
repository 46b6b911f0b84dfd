#pragma once

// The catalogue of diagrammatic relations, exact verification of each one by
// matrix evaluation, and a terminating greedy simplifier built from the
// reducing rules.

#include "evaluate.hpp"

#include <functional>
#include <thread>

namespace symweb {

using Params = std::map<std::string, int>;

struct RewriteRule {
  std::string name;
  std::vector<std::string> param_names;
  std::string range_note;
  // Reducing rules are applied left-to-right by the simplifier; the others
  // (square switch and friends) are verified but never used for rewriting.
  bool reducing = false;
  std::function<bool(const Params&)> in_range;
  std::function<WebMorphism(const Params&)> lhs;
  std::function<WebMorphism(const Params&)> rhs;
  // Bounded enumeration of parameter choices for sweeps; the argument caps
  // the total thickness involved.
  std::function<std::vector<Params>(int)> instances;
};

namespace detail {

inline int param(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw std::invalid_argument("missing relation parameter '" + name + "'");
  return it->second;
}

inline WebMorphism word_on(const WebObject& dom,
                           std::initializer_list<std::pair<int, Generator>> steps) {
  WebWord w = WebWord::identity(dom);
  for (const auto& [pos, gen] : steps) w.append(pos, gen);
  return WebMorphism::of_word(std::move(w));
}

// Operator chains acting on a two-row weight, rightmost factor first.
struct LadderOp {
  char type;  // 'E' or 'F'
  int strand; // 1-based
  int power;
};

inline WebMorphism ladder_chain(int m, std::vector<int> weight, const std::vector<LadderOp>& ops) {
  WebMorphism acc = WebMorphism::identity(object_of_weight(weight));
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    WebMorphism step = it->type == 'F' ? f_ladder(m, it->strand, it->power, weight)
                                       : e_ladder(m, it->strand, it->power, weight);
    acc = compose(step, acc);
    const int d = it->type == 'F' ? -it->power : it->power;
    weight[it->strand - 1] += d;
    weight[it->strand] -= d;
  }
  return acc;
}

inline LaurentFrac signed_qint(int a) {
  return LaurentFrac(a >= 0 ? qint(a) : -qint(-a));
}

}  // namespace detail

inline const std::vector<RewriteRule>& relation_catalogue() {
  static const std::vector<RewriteRule> rules = [] {
    using detail::param;
    using detail::word_on;
    std::vector<RewriteRule> rs;
    const auto no_params = [](const Params&) { return true; };

    // A closed single loop of thin strand evaluates to -[2].
    rs.push_back(RewriteRule{
        "circle_removal",
        {},
        "no parameters",
        true,
        no_params,
        [](const Params&) {
          return word_on(WebObject::empty(), {{0, Generator::cup(1)}, {0, Generator::cap(1)}});
        },
        [](const Params&) {
          return WebMorphism::of_word(WebWord::identity(WebObject::empty()),
                                      LaurentFrac(-qint(2)));
        },
        [](int) { return std::vector<Params>{{}}; }});

    // A closed loop of thickness k evaluates to (-1)^k [k+1].
    rs.push_back(RewriteRule{
        "circle_general",
        {"k"},
        "k >= 1",
        true,
        [](const Params& p) { return param(p, "k") >= 1; },
        [](const Params& p) {
          const int k = param(p, "k");
          return word_on(WebObject::empty(), {{0, Generator::cup(k)}, {0, Generator::cap(k)}});
        },
        [](const Params& p) {
          const int k = param(p, "k");
          LaurentFrac c(qint(k + 1));
          if (k % 2 != 0) c = -c;
          return WebMorphism::of_word(WebWord::identity(WebObject::empty()), c);
        },
        [](int t) {
          std::vector<Params> v;
          for (int k = 1; k <= std::max(1, t); ++k) v.push_back({{"k", k}});
          return v;
        }});

    // Merge then split on two thin strands: [2] id + cup over cap.
    rs.push_back(RewriteRule{
        "dumbbell",
        {},
        "no parameters",
        true,
        no_params,
        [](const Params&) {
          return word_on(WebObject::of({1, 1}),
                         {{0, Generator::merge(1, 1)}, {0, Generator::split(1, 1)}});
        },
        [](const Params&) {
          WebMorphism r = WebMorphism::identity(WebObject::of({1, 1})).scaled(LaurentFrac(qint(2)));
          r += word_on(WebObject::of({1, 1}),
                       {{0, Generator::cap(1)}, {0, Generator::cup(1)}});
          return r;
        },
        [](int) { return std::vector<Params>{{}}; }});

    // A vertex whose two thin legs close onto each other kills the diagram.
    rs.push_back(RewriteRule{
        "lollipop",
        {"side"},
        "side in {0, 1} (0: split-cap, 1: cup-merge)",
        true,
        [](const Params& p) { return param(p, "side") == 0 || param(p, "side") == 1; },
        [](const Params& p) {
          if (param(p, "side") == 0)
            return word_on(WebObject::of({2}),
                           {{0, Generator::split(1, 1)}, {0, Generator::cap(1)}});
          return word_on(WebObject::empty(),
                         {{0, Generator::cup(1)}, {0, Generator::merge(1, 1)}});
        },
        [](const Params& p) {
          if (param(p, "side") == 0)
            return WebMorphism::zero(WebObject::of({2}), WebObject::empty());
          return WebMorphism::zero(WebObject::empty(), WebObject::of({2}));
        },
        [](int) {
          return std::vector<Params>{{{"side", 0}}, {{"side", 1}}};
        }});

    // Split then merge back: multiply by [k+l choose l].
    rs.push_back(RewriteRule{
        "digon_removal",
        {"k", "l"},
        "k, l >= 1",
        true,
        [](const Params& p) { return param(p, "k") >= 1 && param(p, "l") >= 1; },
        [](const Params& p) {
          const int k = param(p, "k"), l = param(p, "l");
          return word_on(WebObject::of({k + l}),
                         {{0, Generator::split(k, l)}, {0, Generator::merge(k, l)}});
        },
        [](const Params& p) {
          const int k = param(p, "k"), l = param(p, "l");
          return WebMorphism::identity(WebObject::of({k + l}))
              .scaled(LaurentFrac(qbinom(k + l, l)));
        },
        [](int t) {
          std::vector<Params> v;
          for (int k = 1; k <= t - 1; ++k)
            for (int l = 1; k + l <= t; ++l) v.push_back({{"k", k}, {"l", l}});
          return v;
        }});

    // Two stacked downward ladders merge into one with a binomial factor.
    rs.push_back(RewriteRule{
        "square_removal",
        {"a", "b", "j1", "j2"},
        "a, b >= 0; j1, j2 >= 0",
        false,
        [](const Params& p) {
          return param(p, "a") >= 0 && param(p, "b") >= 0 && param(p, "j1") >= 0 &&
                 param(p, "j2") >= 0;
        },
        [](const Params& p) {
          const int a = param(p, "a"), b = param(p, "b");
          return detail::ladder_chain(2, {a, b},
                                      {{'F', 1, param(p, "j2")}, {'F', 1, param(p, "j1")}});
        },
        [](const Params& p) {
          const int a = param(p, "a"), b = param(p, "b");
          const int j1 = param(p, "j1"), j2 = param(p, "j2");
          return f_ladder(2, 1, j1 + j2, {a, b}).scaled(LaurentFrac(qbinom(j1 + j2, j1)));
        },
        [](int t) {
          std::vector<Params> v;
          for (int a = 0; a <= t; ++a)
            for (int b = 0; b <= t; ++b)
              for (int j1 = 0; j1 <= 2; ++j1)
                for (int j2 = 0; j2 <= 2; ++j2)
                  v.push_back({{"a", a}, {"b", b}, {"j1", j1}, {"j2", j2}});
          return v;
        }});

    // The upward twin of square_removal.
    rs.push_back(RewriteRule{
        "divided_power",
        {"a", "b", "j1", "j2"},
        "a, b >= 0; j1, j2 >= 0",
        false,
        [](const Params& p) {
          return param(p, "a") >= 0 && param(p, "b") >= 0 && param(p, "j1") >= 0 &&
                 param(p, "j2") >= 0;
        },
        [](const Params& p) {
          const int a = param(p, "a"), b = param(p, "b");
          return detail::ladder_chain(2, {a, b},
                                      {{'E', 1, param(p, "j2")}, {'E', 1, param(p, "j1")}});
        },
        [](const Params& p) {
          const int a = param(p, "a"), b = param(p, "b");
          const int j1 = param(p, "j1"), j2 = param(p, "j2");
          return e_ladder(2, 1, j1 + j2, {a, b}).scaled(LaurentFrac(qbinom(j1 + j2, j1)));
        },
        [](int t) {
          std::vector<Params> v;
          for (int a = 0; a <= t; ++a)
            for (int b = 0; b <= t; ++b)
              for (int j1 = 0; j1 <= 2; ++j1)
                for (int j2 = 0; j2 <= 2; ++j2)
                  v.push_back({{"a", a}, {"b", b}, {"j1", j1}, {"j2", j2}});
          return v;
        }});

    // An up ladder over a down ladder re-expands as down-over-up terms.
    rs.push_back(RewriteRule{
        "square_switch",
        {"k", "l", "j1", "j2"},
        "k, l >= 0; j1, j2 >= 0",
        false,
        [](const Params& p) {
          return param(p, "k") >= 0 && param(p, "l") >= 0 && param(p, "j1") >= 0 &&
                 param(p, "j2") >= 0;
        },
        [](const Params& p) {
          const int k = param(p, "k"), l = param(p, "l");
          return detail::ladder_chain(2, {k, l},
                                      {{'E', 1, param(p, "j2")}, {'F', 1, param(p, "j1")}});
        },
        [](const Params& p) {
          const int k = param(p, "k"), l = param(p, "l");
          const int j1 = param(p, "j1"), j2 = param(p, "j2");
          WebMorphism acc = WebMorphism::zero(detail::object_of_weight({k, l}),
                                              WebObject::zero_object());
          for (int jp = 0; jp <= std::min(j1, j2); ++jp) {
            WebMorphism term = detail::ladder_chain(
                2, {k, l}, {{'F', 1, j1 - jp}, {'E', 1, j2 - jp}});
            acc += term.scaled(LaurentFrac(qbinom(k - j1 - l + j2, jp)));
          }
          return acc;
        },
        [](int t) {
          std::vector<Params> v;
          for (int k = 0; k <= t; ++k)
            for (int l = 0; l <= t; ++l)
              for (int j1 = 0; j1 <= 2; ++j1)
                for (int j2 = 0; j2 <= 2; ++j2)
                  v.push_back({{"k", k}, {"l", l}, {"j1", j1}, {"j2", j2}});
          return v;
        }});

    // EF - FE = [k - l] on a two-strand weight.
    rs.push_back(RewriteRule{
        "ef_fe",
        {"k", "l"},
        "k, l >= 0, k + l >= 1",
        false,
        [](const Params& p) {
          return param(p, "k") >= 0 && param(p, "l") >= 0 && param(p, "k") + param(p, "l") >= 1;
        },
        [](const Params& p) {
          const int k = param(p, "k"), l = param(p, "l");
          WebMorphism ef = detail::ladder_chain(2, {k, l}, {{'E', 1, 1}, {'F', 1, 1}});
          WebMorphism fe = detail::ladder_chain(2, {k, l}, {{'F', 1, 1}, {'E', 1, 1}});
          return ef - fe;
        },
        [](const Params& p) {
          const int k = param(p, "k"), l = param(p, "l");
          return WebMorphism::identity(detail::object_of_weight({k, l}))
              .scaled(detail::signed_qint(k - l));
        },
        [](int t) {
          std::vector<Params> v;
          for (int k = 0; k <= t; ++k)
            for (int l = 0; l <= t; ++l)
              if (k + l >= 1) v.push_back({{"k", k}, {"l", l}});
          return v;
        }});

    // Associativity of merging (and of splitting, mirrored).
    rs.push_back(RewriteRule{
        "frobenius",
        {"h", "k", "l", "dir"},
        "h, k, l >= 1; dir in {0: merges, 1: splits}",
        false,
        [](const Params& p) {
          return param(p, "h") >= 1 && param(p, "k") >= 1 && param(p, "l") >= 1 &&
                 (param(p, "dir") == 0 || param(p, "dir") == 1);
        },
        [](const Params& p) {
          const int h = param(p, "h"), k = param(p, "k"), l = param(p, "l");
          if (param(p, "dir") == 0)
            return word_on(WebObject::of({h, k, l}),
                           {{0, Generator::merge(h, k)}, {0, Generator::merge(h + k, l)}});
          return word_on(WebObject::of({h + k + l}),
                         {{0, Generator::split(h + k, l)}, {0, Generator::split(h, k)}});
        },
        [](const Params& p) {
          const int h = param(p, "h"), k = param(p, "k"), l = param(p, "l");
          if (param(p, "dir") == 0)
            return word_on(WebObject::of({h, k, l}),
                           {{1, Generator::merge(k, l)}, {0, Generator::merge(h, k + l)}});
          return word_on(WebObject::of({h + k + l}),
                         {{0, Generator::split(h, k + l)}, {1, Generator::split(k, l)}});
        },
        [](int t) {
          std::vector<Params> v;
          for (int h = 1; h <= t; ++h)
            for (int k = 1; h + k <= t; ++k)
              for (int l = 1; h + k + l <= std::max(3, t); ++l)
                for (int dir = 0; dir <= 1; ++dir)
                  v.push_back({{"h", h}, {"k", k}, {"l", l}, {"dir", dir}});
          return v;
        }});

    // A strand bent through a cup and a cap straightens out.
    rs.push_back(RewriteRule{
        "snake",
        {"k", "side"},
        "k >= 1; side in {0, 1}",
        true,
        [](const Params& p) {
          return param(p, "k") >= 1 && (param(p, "side") == 0 || param(p, "side") == 1);
        },
        [](const Params& p) {
          const int k = param(p, "k");
          if (param(p, "side") == 0)
            return word_on(WebObject::of({k}), {{1, Generator::cup(k)}, {0, Generator::cap(k)}});
          return word_on(WebObject::of({k}), {{0, Generator::cup(k)}, {1, Generator::cap(k)}});
        },
        [](const Params& p) {
          return WebMorphism::identity(WebObject::of({param(p, "k")}));
        },
        [](int t) {
          std::vector<Params> v;
          for (int k = 1; k <= std::max(1, t); ++k)
            for (int side = 0; side <= 1; ++side) v.push_back({{"k", k}, {"side", side}});
          return v;
        }});

    // Sliding a split across a cap (or a merge across a cup, flipped).
    rs.push_back(RewriteRule{
        "vertex_slide_split",
        {"k", "l", "flip"},
        "k, l >= 1; flip in {0: cap form, 1: cup form}",
        false,
        [](const Params& p) {
          return param(p, "k") >= 1 && param(p, "l") >= 1 &&
                 (param(p, "flip") == 0 || param(p, "flip") == 1);
        },
        [](const Params& p) {
          const int k = param(p, "k"), l = param(p, "l");
          if (param(p, "flip") == 0)
            return word_on(WebObject::of({k + l, k, l}),
                           {{0, Generator::split(l, k)},
                            {1, Generator::cap(k)},
                            {0, Generator::cap(l)}});
          return word_on(WebObject::empty(),
                         {{0, Generator::cup(l)},
                          {1, Generator::cup(k)},
                          {0, Generator::merge(l, k)}});
        },
        [](const Params& p) {
          const int k = param(p, "k"), l = param(p, "l");
          if (param(p, "flip") == 0)
            return word_on(WebObject::of({k + l, k, l}),
                           {{1, Generator::merge(k, l)}, {0, Generator::cap(k + l)}});
          return word_on(WebObject::empty(),
                         {{0, Generator::cup(k + l)}, {1, Generator::split(k, l)}});
        },
        [](int t) {
          std::vector<Params> v;
          for (int k = 1; k + 1 <= t; ++k)
            for (int l = 1; k + l <= t; ++l)
              for (int flip = 0; flip <= 1; ++flip)
                v.push_back({{"k", k}, {"l", l}, {"flip", flip}});
          return v;
        }});

    // The mirror-image slide, with the thick strand on the other side.
    rs.push_back(RewriteRule{
        "vertex_slide_merge",
        {"k", "l", "flip"},
        "k, l >= 1; flip in {0: cap form, 1: cup form}",
        false,
        [](const Params& p) {
          return param(p, "k") >= 1 && param(p, "l") >= 1 &&
                 (param(p, "flip") == 0 || param(p, "flip") == 1);
        },
        [](const Params& p) {
          const int k = param(p, "k"), l = param(p, "l");
          if (param(p, "flip") == 0)
            return word_on(WebObject::of({k, l, k + l}),
                           {{2, Generator::split(l, k)},
                            {1, Generator::cap(l)},
                            {0, Generator::cap(k)}});
          return word_on(WebObject::empty(),
                         {{0, Generator::cup(k)},
                          {1, Generator::cup(l)},
                          {2, Generator::merge(l, k)}});
        },
        [](const Params& p) {
          const int k = param(p, "k"), l = param(p, "l");
          if (param(p, "flip") == 0)
            return word_on(WebObject::of({k, l, k + l}),
                           {{0, Generator::merge(k, l)}, {0, Generator::cap(k + l)}});
          return word_on(WebObject::empty(),
                         {{0, Generator::cup(k + l)}, {0, Generator::split(k, l)}});
        },
        [](int t) {
          std::vector<Params> v;
          for (int k = 1; k + 1 <= t; ++k)
            for (int l = 1; k + l <= t; ++l)
              for (int flip = 0; flip <= 1; ++flip)
                v.push_back({{"k", k}, {"l", l}, {"flip", flip}});
          return v;
        }});

    // Ladder operators on disjoint or distinct strand pairs commute.
    // variant 0: E at (1,2) with F at (2,3); variant 1: F at (1,2) with F at
    // (3,4); variant 2: E at (1,2) with E at (3,4); variant 3: F at (1,2)
    // with E at (2,3).
    rs.push_back(RewriteRule{
        "commutation",
        {"variant", "j1", "j2", "a", "b", "c", "d"},
        "variant in {0..3}; j1, j2 >= 0; weights >= 0 (d unused for 3-strand variants)",
        false,
        [](const Params& p) {
          const int v = param(p, "variant");
          return v >= 0 && v <= 3 && param(p, "j1") >= 0 && param(p, "j2") >= 0 &&
                 param(p, "a") >= 0 && param(p, "b") >= 0 && param(p, "c") >= 0 &&
                 param(p, "d") >= 0;
        },
        [](const Params& p) {
          const int j1 = param(p, "j1"), j2 = param(p, "j2");
          const int a = param(p, "a"), b = param(p, "b"), c = param(p, "c"), d = param(p, "d");
          switch (param(p, "variant")) {
            case 0: return detail::ladder_chain(3, {a, b, c}, {{'E', 1, j1}, {'F', 2, j2}});
            case 1: return detail::ladder_chain(4, {a, b, c, d}, {{'F', 1, j1}, {'F', 3, j2}});
            case 2: return detail::ladder_chain(4, {a, b, c, d}, {{'E', 1, j1}, {'E', 3, j2}});
            default: return detail::ladder_chain(3, {a, b, c}, {{'F', 1, j1}, {'E', 2, j2}});
          }
        },
        [](const Params& p) {
          const int j1 = param(p, "j1"), j2 = param(p, "j2");
          const int a = param(p, "a"), b = param(p, "b"), c = param(p, "c"), d = param(p, "d");
          switch (param(p, "variant")) {
            case 0: return detail::ladder_chain(3, {a, b, c}, {{'F', 2, j2}, {'E', 1, j1}});
            case 1: return detail::ladder_chain(4, {a, b, c, d}, {{'F', 3, j2}, {'F', 1, j1}});
            case 2: return detail::ladder_chain(4, {a, b, c, d}, {{'E', 3, j2}, {'E', 1, j1}});
            default: return detail::ladder_chain(3, {a, b, c}, {{'E', 2, j2}, {'F', 1, j1}});
          }
        },
        [](int t) {
          std::vector<Params> v;
          const int w = std::min(2, std::max(1, t - 1));
          for (int variant = 0; variant <= 3; ++variant) {
            const bool four = variant == 1 || variant == 2;
            for (int a = 1; a <= w; ++a)
              for (int b = 1; b <= w; ++b)
                for (int c = 1; c <= w; ++c)
                  for (int d = 1; d <= (four ? w : 1); ++d)
                    v.push_back({{"variant", variant}, {"j1", 1}, {"j2", 1},
                                 {"a", a}, {"b", b}, {"c", c}, {"d", d}});
          }
          return v;
        }});

    // The quantum Serre relation between neighbouring ladder operators.
    rs.push_back(RewriteRule{
        "serre",
        {"a", "b", "c", "dir"},
        "a, b, c >= 0; dir in {0: F form, 1: E form}",
        false,
        [](const Params& p) {
          return param(p, "a") >= 0 && param(p, "b") >= 0 && param(p, "c") >= 0 &&
                 (param(p, "dir") == 0 || param(p, "dir") == 1);
        },
        [](const Params& p) {
          const int a = param(p, "a"), b = param(p, "b"), c = param(p, "c");
          const char t = param(p, "dir") == 0 ? 'F' : 'E';
          WebMorphism xxy =
              detail::ladder_chain(3, {a, b, c}, {{t, 1, 1}, {t, 1, 1}, {t, 2, 1}});
          WebMorphism xyx =
              detail::ladder_chain(3, {a, b, c}, {{t, 1, 1}, {t, 2, 1}, {t, 1, 1}});
          WebMorphism yxx =
              detail::ladder_chain(3, {a, b, c}, {{t, 2, 1}, {t, 1, 1}, {t, 1, 1}});
          return xxy - xyx.scaled(LaurentFrac(qint(2))) + yxx;
        },
        [](const Params& p) {
          const int a = param(p, "a"), b = param(p, "b"), c = param(p, "c");
          // The chain shifts the weight; a vanished target collapses to the
          // zero-object marker.
          const std::vector<int> target = param(p, "dir") == 0
                                              ? std::vector<int>{a - 2, b + 1, c + 1}
                                              : std::vector<int>{a + 2, b - 1, c - 1};
          return WebMorphism::zero(detail::object_of_weight({a, b, c}),
                                   detail::weight_ok(target) ? detail::object_of_weight(target)
                                                             : WebObject::zero_object());
        },
        [](int t) {
          std::vector<Params> v;
          const int w = std::min(3, std::max(1, t));
          for (int a = 1; a <= w; ++a)
            for (int b = 1; b <= w; ++b)
              for (int c = 1; c <= w; ++c)
                for (int dir = 0; dir <= 1; ++dir)
                  v.push_back({{"a", a}, {"b", b}, {"c", c}, {"dir", dir}});
          return v;
        }});

    return rs;
  }();
  return rules;
}

inline const RewriteRule& find_rule(const std::string& name) {
  for (const RewriteRule& r : relation_catalogue())
    if (r.name == name) return r;
  throw std::invalid_argument("unknown relation '" + name + "'");
}

struct CheckReport {
  std::string rule;
  Params params;
  bool ok = false;
  IntertwinerMatrix lhs;
  IntertwinerMatrix rhs;
};

namespace detail {
// Evaluate a possibly zero morphism, borrowing boundaries from the other side
// when a vanished ladder left only the zero-object marker.
inline IntertwinerMatrix eval_with_fallback(const WebMorphism& u, const WebObject& fdom,
                                            const WebObject& fcod) {
  if (u.is_zero()) {
    const WebObject& d = u.domain().is_zero() ? fdom : u.domain();
    const WebObject& c = u.codomain().is_zero() ? fcod : u.codomain();
    return IntertwinerMatrix::zero(d, c);
  }
  return eval(u);
}
}  // namespace detail

inline CheckReport check_relation(const RewriteRule& rule, const Params& params) {
  for (const std::string& n : rule.param_names)
    if (params.find(n) == params.end())
      throw std::invalid_argument("relation '" + rule.name + "' needs parameter '" + n + "'");
  if (!rule.in_range(params))
    throw std::invalid_argument("relation '" + rule.name + "' parameters out of range (" +
                                rule.range_note + ")");
  CheckReport rep;
  rep.rule = rule.name;
  rep.params = params;
  const WebMorphism l = rule.lhs(params);
  const WebMorphism r = rule.rhs(params);
  WebObject fdom = !l.domain().is_zero() ? l.domain() : r.domain();
  WebObject fcod = !l.codomain().is_zero() ? l.codomain() : r.codomain();
  if (fdom.is_zero()) fdom = WebObject::empty();
  if (fcod.is_zero()) fcod = WebObject::empty();
  rep.lhs = detail::eval_with_fallback(l, fdom, fcod);
  rep.rhs = detail::eval_with_fallback(r, fdom, fcod);
  rep.ok = rep.lhs == rep.rhs;
  return rep;
}

inline CheckReport check_relation(const std::string& name, const Params& params) {
  return check_relation(find_rule(name), params);
}

struct SweepLine {
  std::string rule;
  Params params;
  bool ok = false;
};

// Run every catalogue rule over its bounded instance list. thread_count <= 1
// runs inline; otherwise the instances are partitioned across worker threads.
inline std::vector<SweepLine> check_all_relations(int max_thickness, int thread_count = 1) {
  std::vector<std::pair<const RewriteRule*, Params>> jobs;
  for (const RewriteRule& r : relation_catalogue())
    for (Params& p : r.instances(max_thickness)) jobs.push_back({&r, std::move(p)});
  std::vector<SweepLine> lines(jobs.size());
  const auto run_range = [&](size_t begin, size_t end) {
    for (size_t t = begin; t < end; ++t) {
      CheckReport rep = check_relation(*jobs[t].first, jobs[t].second);
      lines[t] = SweepLine{rep.rule, rep.params, rep.ok};
    }
  };
  if (thread_count <= 1) {
    run_range(0, jobs.size());
  } else {
    std::vector<std::thread> workers;
    const size_t n = jobs.size();
    const size_t per = (n + thread_count - 1) / thread_count;
    for (int w = 0; w < thread_count; ++w) {
      const size_t begin = std::min(n, w * per), end = std::min(n, (w + 1) * per);
      if (begin < end) workers.emplace_back(run_range, begin, end);
    }
    for (auto& th : workers) th.join();
  }
  return lines;
}

// ---------------------------------------------------------------------------
// Simplifier
// ---------------------------------------------------------------------------

struct SimplifyResult {
  WebMorphism morphism;
  bool budget_exhausted = false;
  long steps = 0;
};

namespace detail {

struct Step {
  Generator gen;
  int pos;
};

inline WebWord replay(const WebObject& dom, const std::vector<Step>& steps) {
  WebWord w = WebWord::identity(dom);
  for (const Step& s : steps) w.append(s.pos, s.gen);
  return w;
}

// Bubble independent slices into position order: when a slice acts strictly
// left of the output interval of the slice below it, the two commute and the
// left one moves down. Canonical order exposes the adjacent-pair patterns.
inline void interchange_sort(std::vector<Step>& steps) {
  bool moved = true;
  size_t guard = steps.size() * steps.size() + 4;
  while (moved && guard-- > 0) {
    moved = false;
    for (size_t i = 0; i + 1 < steps.size(); ++i) {
      const Step& lo = steps[i];
      const Step& hi = steps[i + 1];
      const int lo_out = lo.gen.codomain_arity();
      const int hi_in = hi.gen.domain_arity();
      const int hi_out = hi.gen.codomain_arity();
      if (hi.pos + hi_in <= lo.pos) {
        Step new_lo{hi.gen, hi.pos};
        Step new_hi{lo.gen, lo.pos + (hi_out - hi_in)};
        steps[i] = new_lo;
        steps[i + 1] = new_hi;
        moved = true;
      } else {
        (void)lo_out;
      }
    }
  }
}

struct Replacement {
  LaurentFrac factor;
  std::vector<Step> steps;  // empty factor list allowed; zero factor kills the term
};

// Match the reducing rules on the adjacent pair (steps[i], steps[i+1]).
// Returns the replacement terms for that pair, or nullopt.
inline std::optional<std::vector<Replacement>> match_pair(const Step& a, const Step& b) {
  const Generator& g1 = a.gen;
  const Generator& g2 = b.gen;
  // Circle: cup then cap on the same two strands.
  if (g1.kind == GenKind::Cup && g2.kind == GenKind::Cap && g1.k == g2.k && b.pos == a.pos) {
    LaurentFrac c(qint(g1.k + 1));
    if (g1.k % 2 != 0) c = -c;
    return std::vector<Replacement>{{c, {}}};
  }
  // Snake: cup then cap offset by one strand straightens out.
  if (g1.kind == GenKind::Cup && g2.kind == GenKind::Cap && g1.k == g2.k &&
      (b.pos == a.pos - 1 || b.pos == a.pos + 1)) {
    return std::vector<Replacement>{{LaurentFrac(1), {}}};
  }
  // Digon: split then merge back.
  if (g1.kind == GenKind::Split && g2.kind == GenKind::Merge && g1.k == g2.k && g1.l == g2.l &&
      b.pos == a.pos) {
    return std::vector<Replacement>{{LaurentFrac(qbinom(g1.k + g1.l, g1.l)), {}}};
  }
  // Lollipop: a split whose legs immediately close, either way up.
  if (g1.kind == GenKind::Split && g2.kind == GenKind::Cap && g1.k == g1.l && g2.k == g1.k &&
      b.pos == a.pos) {
    return std::vector<Replacement>{};
  }
  if (g1.kind == GenKind::Cup && g2.kind == GenKind::Merge && g2.k == g2.l && g2.k == g1.k &&
      b.pos == a.pos) {
    return std::vector<Replacement>{};
  }
  // Dumbbell: thin merge then split re-expands.
  if (g1.kind == GenKind::Merge && g2.kind == GenKind::Split && g1.k == 1 && g1.l == 1 &&
      g2.k == 1 && g2.l == 1 && b.pos == a.pos) {
    std::vector<Replacement> out;
    out.push_back({LaurentFrac(qint(2)), {}});
    out.push_back({LaurentFrac(1),
                   {Step{Generator::cap(1), a.pos}, Step{Generator::cup(1), a.pos}}});
    return out;
  }
  return std::nullopt;
}

}  // namespace detail

// Greedy rewriting with the reducing relations. Exact: the result is always
// equal to the input as a morphism. Each rule application consumes one unit
// of budget; on exhaustion the remaining terms are passed through untouched
// and the flag is set.
inline SimplifyResult simplify(const WebMorphism& u, long budget = 100000) {
  SimplifyResult res;
  res.morphism = WebMorphism::zero(u.domain(), u.codomain());
  if (u.is_zero()) return res;
  std::map<WebWord, LaurentFrac> pending(u.terms().begin(), u.terms().end());
  while (!pending.empty()) {
    auto it = pending.begin();
    WebWord w = it->first;
    LaurentFrac coeff = it->second;
    pending.erase(it);
    if (coeff.is_zero()) continue;
    std::vector<detail::Step> steps;
    steps.reserve(w.slices.size());
    for (const Slice& s : w.slices) steps.push_back({s.gen, s.pos});
    detail::interchange_sort(steps);
    bool rewrote = false;
    for (size_t i = 0; !rewrote && i + 1 < steps.size(); ++i) {
      auto reps = detail::match_pair(steps[i], steps[i + 1]);
      if (!reps) continue;
      rewrote = true;
      if (res.steps >= budget) {
        res.budget_exhausted = true;
        res.morphism.add_term(detail::replay(w.dom, steps), coeff);
        for (const auto& [pw, pc] : pending) res.morphism.add_term(pw, pc);
        return res;
      }
      ++res.steps;
      for (const detail::Replacement& rep : *reps) {
        std::vector<detail::Step> ns(steps.begin(), steps.begin() + i);
        ns.insert(ns.end(), rep.steps.begin(), rep.steps.end());
        ns.insert(ns.end(), steps.begin() + i + 2, steps.end());
        WebWord nw = detail::replay(w.dom, ns);
        LaurentFrac nc = coeff * rep.factor;
        if (nc.is_zero()) continue;
        auto [slot, inserted] = pending.try_emplace(nw, LaurentFrac());
        slot->second += nc;
        if (slot->second.is_zero()) pending.erase(slot);
      }
    }
    if (!rewrote) res.morphism.add_term(detail::replay(w.dom, steps), coeff);
  }
  return res;
}

}  // namespace symweb

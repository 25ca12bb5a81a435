#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ricci/canonical.hpp"
#include "ricci/graph.hpp"

namespace ricci {

enum class FamilyKind { Path, Cycle, Prism, MobiusLadder, Particular, QuasiLadder, InfiniteWindow };

std::string_view to_string(FamilyKind kind);

/// Ladder core x_1..x_k, y_1..y_k capped by two catalog end forms. The right
/// form is glued with its roots swapped when `twisted` is set; this only
/// changes the isomorphism class when both forms are root-asymmetric.
struct QuasiLadderSpec {
  int core_rungs = 1;
  int left_form = 0;
  int right_form = 0;
  bool twisted = false;

  friend bool operator==(const QuasiLadderSpec&, const QuasiLadderSpec&) = default;
  friend auto operator<=>(const QuasiLadderSpec&, const QuasiLadderSpec&) = default;
};

enum class ParticularVariant {
  Reconstruction,  // 10 vertices: path v0..v6, u1,u3,u5, u-path u1 u3 u5
  LemmaText,       // 12 vertices: path v0..v6, spokes u_i~v_i, u-cycle u1 u2 u4 u5 u3
};

struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::Path;
  int size = 0;  // path length, cycle order, prism/Moebius k, particular order, window width
  std::optional<QuasiLadderSpec> quasi_ladder;
  char infinite_kind = 0;  // 'a'..'j' for windows

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

nlohmann::json to_json(const FamilyDescriptor& d);

/// One rooted template of the end-form catalog. Vertices 0 and 1 are the roots
/// glued onto the end rung (0 onto the x rail, 1 onto the y rail).
struct EndForm {
  int id = 0;
  std::string name;
  int vertices = 2;
  std::vector<Edge> edges;
  bool ollivier = false;        // keeps kappa^O >= 0 on a long normalized core
  bool root_symmetric = true;   // swapping the roots is an automorphism
  CanonicalForm rooted;         // canonical form with both roots coloured
};

/// Loaded once from `end_forms.json` in the data directory and validated.
const std::vector<EndForm>& end_form_catalog();
const EndForm& end_form(int id);

/// "L3", "R3" or "3" -> 3. Throws BadParam.
int parse_form_id(std::string_view text);

Graph gen_path(int length, WeightScheme scheme = WeightScheme::Combinatorial);
Graph gen_cycle(int n, WeightScheme scheme = WeightScheme::Combinatorial);
Graph gen_prism(int k, WeightScheme scheme = WeightScheme::Combinatorial);
Graph gen_mobius(int k, WeightScheme scheme = WeightScheme::Combinatorial);
Graph gen_particular(ParticularVariant variant = ParticularVariant::Reconstruction,
                     WeightScheme scheme = WeightScheme::Combinatorial);
Graph gen_quasi_ladder(const QuasiLadderSpec& spec, WeightScheme scheme = WeightScheme::Combinatorial);

/// Same graph as gen_quasi_ladder without the curvature self-validation.
/// Throws BadParam on unknown ids and SelfValidationFailed when not subcubic.
Graph assemble_quasi_ladder(const QuasiLadderSpec& spec, WeightScheme scheme = WeightScheme::Combinatorial);

/// Spec with `twisted` cleared when it cannot matter.
QuasiLadderSpec normalized(QuasiLadderSpec spec);

struct InfiniteWindow {
  char kind = 'a';
  int width = 0;
  Graph graph;
  std::vector<bool> interior;  // parallel to graph.edges()
};

/// Finite truncation of an infinite family: a both-side line, b one-side
/// line, c infinite ladder, d..j one-side ladders capped by catalog forms
/// 0..6. Edges whose endpoints both lie more than 3 hops from every cut
/// vertex are marked interior.
InfiniteWindow gen_infinite_window(char kind, int width, WeightScheme scheme = WeightScheme::Combinatorial);

/// Kinds allowed by the Ollivier-curvature classification (a..c plus the
/// windows whose end form is Ollivier-compatible).
bool ollivier_window_kind(char kind);

Graph generate(const FamilyDescriptor& d, WeightScheme scheme = WeightScheme::Combinatorial);

}  // namespace ricci

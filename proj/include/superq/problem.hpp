#pragma once

// Problem files ("schema": "superq/1").  Parsing is strict: unknown keys,
// wrong types and malformed polynomials raise InputError with a JSON pointer.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "superq/coaction.hpp"
#include "superq/freeness.hpp"

namespace superq {

inline constexpr const char* kSchema = "superq/1";

using Json = nlohmann::ordered_json;

/// Malformed input; `pointer` locates the offending value.
class InputError : public Error {
public:
    InputError(std::string pointer, const std::string& what)
        : Error((pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(std::move(pointer))
    {
    }
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

class IoError : public Error {
public:
    using Error::Error;
};

struct ProblemOptions {
    int invariants_max_degree = 8;
    int freeness_bound = 6;
    int quotient_max_degree = 6;
    int validate_max_degree = 6;
    bool assert_free = false;
    std::vector<std::string> normal_subgroup;  // element names
};

/// The action as data, before the coaction laws are checked.
struct ActionSpec {
    ActionKind kind = ActionKind::Explicit;
    std::vector<Polynomial> derivation;                    // OddDerivation
    std::vector<std::vector<Polynomial>> element_images;  // GroupAction
    std::vector<Tensor> tau;                               // Explicit
};

struct Problem {
    std::string name;
    Field field = Field::rationals();
    PresentationPtr space;
    SupergroupSpec group_spec;
    std::shared_ptr<const HopfSuperAlgebra> group;
    ActionSpec action;
    ProblemOptions options;
    std::optional<StabilizerWitness> witness;
    std::vector<Polynomial> free_basis;
};

Problem parse_problem(const nlohmann::json& doc);
Problem parse_problem_text(const std::string& text);
Problem load_problem(const std::filesystem::path& path);

/// Witness object ({algebra, point, element}) or a document with a "witness" key.
StabilizerWitness parse_witness(const nlohmann::json& doc, const Problem& problem);
StabilizerWitness load_witness(const std::filesystem::path& path, const Problem& problem);

/// Runs the coaction factory for the parsed action (throws CoactionError or Error).
Coaction build_coaction(const Problem& problem);

Json to_json(const Polynomial& p);
/// Pure-term list [[left, right], ...] with coefficients folded into the left factor.
Json to_json(const Tensor& t);
Json to_json(const PresentationPtr& pres);
/// Same shape as the witness input, so reports can be fed back with --witness.
Json to_json(const StabilizerWitness& w, const PresentationPtr& space, const PresentationPtr& group);

}  // namespace superq

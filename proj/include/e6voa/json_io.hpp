#pragma once

#include <json.hpp>

#include <string>

#include "e6voa/fock.hpp"
#include "e6voa/hwv.hpp"
#include "e6voa/qseries.hpp"
#include "e6voa/virasoro.hpp"

namespace e6voa::json_io {

using json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

// [{factors: [[i,n],...], exponent: [6 ints], coeff: "p/q"}, ...], sorted.
json to_json(const State& s);
json to_json(const LatticePoint& p);
json to_json(const F4Weight& w);
json to_json(const Scalar& x);

// Throw std::invalid_argument with a description of the offending field.
State state_from_json(const json& j);
LatticePoint lattice_point_from_json(const json& j);
F4Weight f4_weight_from_json(const json& j);

json to_json(const hwv::HwvReport& r);
json to_json(const hwv::UConstruction& u);
json to_json(const hwv::FindResult& f);
json to_json(const virasoro::OpeResult& r, const virasoro::ConformalVector& cv);
json to_json(const virasoro::BracketReport& r);
json to_json(const virasoro::CommutantReport& r);
json to_json(const qseries::IdentityCheck& c);

// Golden fixtures.
struct GoldenVector {
  std::string name;
  Scalar central_charge;
  State state;
};
struct GoldenHwv {
  std::string id, module;
  Scalar h;
  F4Weight omega;
  State state;
};

json golden_json(const virasoro::ConformalVector& cv);
json golden_json(const hwv::BuiltinHwv& b);
GoldenVector golden_vector_from_json(const json& j);
GoldenHwv golden_hwv_from_json(const json& j);

}  // namespace e6voa::json_io

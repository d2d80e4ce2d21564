#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "cyclo/braid.hpp"
#include "cyclo/hecke.hpp"
#include "cyclo/hmodule.hpp"
#include "cyclo/roots.hpp"
#include "cyclo/wgroup.hpp"

namespace cyclo {

using Json = nlohmann::ordered_json;

Json to_json(const Perm& x);
Json to_json(const Composition& mu);
Json to_json(const WElem& w);
Json to_json(const ParabolicIndex& p);
Json to_json(const DoubleCosetDatum& d);
Json to_json(const BraidWord& w);
Json to_json(const std::vector<RewriteStep>& trace);
Json to_json(const Root& root);
Json to_json(const QMatrix& m);
Json to_json(const HModule& m);
Json to_json(const GenericHecke& h, const GenericHecke::Elem& e);
Json to_json(const RationalHecke& h, const RationalHecke::Elem& e);

std::string rational_str(const Rational& v);

// "l:[m1,m2,...]" <-> ParabolicIndex, the CLI syntax for (l, mu).
ParabolicIndex parse_parabolic(const std::string& text, int n);
std::string parabolic_str(const ParabolicIndex& p);

}  // namespace cyclo

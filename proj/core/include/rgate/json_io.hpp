#pragma once

#include <string>

#include <json.hpp>

#include "rgate/abelian.hpp"
#include "rgate/cobordism.hpp"
#include "rgate/groupcoh.hpp"
#include "rgate/obstruct.hpp"
#include "rgate/repvar.hpp"
#include "rgate/seifert.hpp"

namespace rgate::json_io {

// All emitters use ordered JSON so byte output is reproducible.
using Json = nlohmann::ordered_json;

Json to_json(const abelian::IntMatrix& m);
abelian::IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const abelian::FgAbelianGroup& g);
abelian::FgAbelianGroup fg_group_from_json(const Json& j);

Json to_json(const abelian::SnfDecomposition& d);

Json to_json(const seifert::SeifertPresentation& s);
seifert::SeifertPresentation seifert_from_json(const Json& j);

Json to_json(const seifert::MontesinosKnot& k);
seifert::MontesinosKnot montesinos_from_json(const Json& j);

Json to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const Json& j);

Json to_json(const groupcoh::Representation& rho);
groupcoh::Representation representation_from_json(const Json& j);
// Representation whose presentation is supplied externally.
groupcoh::Representation representation_from_json(const Json& j, const GroupPresentation& p);

Json to_json(const repvar::RotationData& r);
repvar::RotationData rotation_from_json(const Json& j);

Json to_json(const cobordism::RibbonHandleData& h);
cobordism::RibbonHandleData handle_data_from_json(const Json& j);

Json to_json(const obstruct::ObstructionReport& r);

obstruct::ManifoldDescription manifold_from_json(const Json& j);

// "p/q", integer, or decimal string/number. Decimal origin is recorded so the
// Chern-Simons comparison can fall back to tolerance.
Rational rational_from_json(const Json& j, bool* exact = nullptr);
std::string rational_to_string(const Rational& q);

Json parse_file(const std::string& path);
Json parse_text(const std::string& text);

}  // namespace rgate::json_io

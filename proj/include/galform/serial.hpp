#ifndef GALFORM_SERIAL_HPP
#define GALFORM_SERIAL_HPP

#include <json.hpp>

#include "galform/etale.hpp"
#include "galform/rootdata.hpp"

namespace galform {

using Json = nlohmann::json;

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json element_to_json(const FieldElement& e);
FieldElement element_from_json(const Field& f, const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Field& f, const Json& j);

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json point_to_json(const FamilyPoint& pt);
FamilyPoint point_from_json(const Json& j);

Json root_datum_to_json(const BasedRootDatum& b);
BasedRootDatum root_datum_from_json(const Json& j);

/// Relations as sparse monomial lists [coefficient, exponent vector].
Json presentation_to_json(const Presentation& p);

}  // namespace galform

#endif

#pragma once

#include <json.hpp>

#include "altsurg/cmlat.hpp"
#include "altsurg/graphlat.hpp"
#include "altsurg/intlat.hpp"
#include "altsurg/ratcf.hpp"
#include "altsurg/recognizer.hpp"
#include "altsurg/surgery.hpp"

namespace altsurg {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);  // "a/b" string, or an integer when b = 1
Json to_json(const Slope& s);
Json to_json(const GramLattice& g);
Json to_json(const Multigraph& g);
Json to_json(const ChangemakerLattice& lat);
Json to_json(const Move& m);
Json to_json(const MoveTrace& trace);
Json to_json(const EmbeddingCertificate& cert);
Json to_json(const std::vector<SpincClass>& classes);

// Reads back the output of to_json(EmbeddingCertificate): the lattice is
// rebuilt from its slope and sigma, then the certificate is validated.
EmbeddingCertificate certificate_from_json(const Json& j);

}  // namespace altsurg

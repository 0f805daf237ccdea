#pragma once

#include "json.hpp"

#include "affaut/degeneration.hpp"
#include "affaut/endo.hpp"
#include "affaut/finite_action.hpp"
#include "affaut/identities.hpp"
#include "affaut/quotient_v.hpp"
#include "affaut/tame.hpp"

namespace affaut {

/// All reports use ordered JSON so output bytes are a pure function of the
/// request (golden-file stability).
using Json = nlohmann::ordered_json;

Json endo_json(const Endo& f);
Json matrix_json(const ScalarMatrix& m);
Json scalar_vector_json(const std::vector<Scalar>& v);
Json tame_word_json(const TameWord& w);
Json perm_rep_json(const PermRep& rep);
Json certificate_json(const DegenerationCertificate& cert);
Json identity_report_json(const IdentityReport& report);
Json census_json(const CensusReport& report);
Json v_membership_json(const VMembership& m);
Json v_class_json(const VClass& c);

}  // namespace affaut

#pragma once

#include "pcd/decomposer.hpp"
#include "pcd/gallai.hpp"
#include "pcd/graph.hpp"
#include "pcd/hanging_square.hpp"
#include "pcd/harness.hpp"
#include "pcd/skeleton.hpp"

#include "json.hpp"

namespace pcd {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

void to_json(json& j, const Walk& w);
void from_json(const json& j, Walk& w);
void to_json(json& j, const Decomposition& d);
void from_json(const json& j, Decomposition& d);
void to_json(json& j, const BuildingSequence& s);
void from_json(const json& j, BuildingSequence& s);
void to_json(json& j, const Bunch& b);
void from_json(const json& j, Bunch& b);
void to_json(json& j, const OccupationRecord& o);
void from_json(const json& j, OccupationRecord& o);
void to_json(json& j, const HangingSquareCertificate& c);
void from_json(const json& j, HangingSquareCertificate& c);
void to_json(json& j, const ClassGReport& r);
void from_json(const json& j, ClassGReport& r);
void to_json(json& j, const DichotomyResult& r);
void from_json(const json& j, DichotomyResult& r);
void to_json(json& j, const GallaiResult& r);
void from_json(const json& j, GallaiResult& r);
void to_json(json& j, const SurveyReport& r);
void from_json(const json& j, SurveyReport& r);
void to_json(json& j, const FuzzReport& r);
void from_json(const json& j, FuzzReport& r);

// {"schema_version": 1, "type": type, ...payload fields}
template <class T>
json document(const std::string& type, const T& payload) {
	json j{{"schema_version", kSchemaVersion}, {"type", type}};
	json body = payload;
	for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
	return j;
}

// Accepts a bare certificate object, a "certificate" document or a dichotomy
// result carrying a certificate. Throws parse_error.
HangingSquareCertificate certificate_from_document(const json& j);

} // namespace pcd

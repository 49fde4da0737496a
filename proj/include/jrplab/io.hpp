#ifndef JRPLAB_IO_HPP
#define JRPLAB_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "jrplab/online.hpp"
#include "jrplab/service_function.hpp"
#include "jrplab/stretch.hpp"

namespace jrplab {

inline constexpr const char* kLibraryVersion = "1.0.0";
inline constexpr const char* kInstanceSchema = "jrplab-instance/1";
inline constexpr const char* kPartitionSchema = "jrplab-partition/1";

// On-disk instance: a service function plus an optional request stream.
// All numbers are "num/den" strings; sets are sorted index arrays; unknown
// fields are rejected so files round-trip bit-exactly.
struct InstanceFile {
  ServiceFunctionSpec spec;
  std::optional<RequestStream> requests;

  bool operator==(const InstanceFile& o) const {
    return spec == o.spec && requests == o.requests;
  }
};

nlohmann::json serialize_instance(const InstanceFile& inst);
InstanceFile parse_instance(const nlohmann::json& doc);

void write_instance(const InstanceFile& inst, const std::string& path);
InstanceFile read_instance(const std::string& path);

nlohmann::json serialize_partition(const Partition& p);
Partition parse_partition(const nlohmann::json& doc);

nlohmann::json stretch_report_json(const StretchReport& r);
nlohmann::json schedule_json(const ServiceSchedule& s);

// Helpers shared by the CLI: documents are written with sorted keys and a
// trailing newline so repeated runs are byte-identical.
void write_json_file(const nlohmann::json& doc, const std::string& path);
nlohmann::json read_json_file(const std::string& path);

}  // namespace jrplab

#endif

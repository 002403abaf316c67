#include "pricesched/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pricesched {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw ParseError("rationals must be \"num/den\" strings: " + value.dump());
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("model") || !doc.contains("jobs"))
    throw ParseError("instance needs at least 'model' and 'jobs'");

  ModelKind kind = model_kind_from_string(doc.at("model").get<std::string>());
  Instance instance;

  if (kind == ModelKind::Related) {
    if (!doc.contains("speeds")) throw ParseError("related instance needs 'speeds'");
    std::vector<Rational> speeds;
    for (const json& s : doc.at("speeds")) speeds.push_back(rational_from_json(s));
    if (doc.contains("m") && doc.at("m").get<int>() != static_cast<int>(speeds.size()))
      throw ParseError("'m' disagrees with the number of speeds");
    instance.model = MachineModel::related(std::move(speeds));
  } else {
    if (!doc.contains("m")) throw ParseError("instance needs 'm'");
    int m = doc.at("m").get<int>();
    switch (kind) {
      case ModelKind::Identical: instance.model = MachineModel::identical(m); break;
      case ModelKind::Restricted: instance.model = MachineModel::restricted(m); break;
      case ModelKind::Unrelated: instance.model = MachineModel::unrelated(m); break;
      default: break;
    }
  }

  if (doc.contains("epsilon")) instance.epsilon = rational_from_json(doc.at("epsilon"));

  for (const json& entry : doc.at("jobs")) {
    if (entry.is_string() || entry.is_number_integer()) {
      instance.jobs.push_back(JobProfile::sized(rational_from_json(entry)));
    } else if (entry.is_object() && entry.contains("times")) {
      std::vector<Rational> times;
      for (const json& t : entry.at("times")) times.push_back(rational_from_json(t));
      instance.jobs.push_back(JobProfile::unrelated(std::move(times)));
    } else if (entry.is_object() && entry.contains("size")) {
      std::vector<int> allowed;
      if (!entry.contains("allowed")) throw ParseError("restricted job needs 'allowed'");
      for (const json& i : entry.at("allowed")) allowed.push_back(i.get<int>() - 1);
      instance.jobs.push_back(
          JobProfile::restricted(rational_from_json(entry.at("size")), std::move(allowed)));
    } else {
      throw ParseError("unrecognized job entry: " + entry.dump());
    }
  }

  instance.validate();
  return instance;
}

std::string instance_to_json_text(const Instance& instance) {
  json doc;
  doc["model"] = to_string(instance.model.kind);
  doc["m"] = instance.m();
  if (instance.model.kind == ModelKind::Related) {
    json speeds = json::array();
    for (const Rational& s : instance.model.speeds) speeds.push_back(s.str());
    doc["speeds"] = speeds;
  }
  doc["epsilon"] = instance.epsilon.str();
  json jobs = json::array();
  for (const JobProfile& job : instance.jobs) {
    switch (instance.model.kind) {
      case ModelKind::Identical:
      case ModelKind::Related:
        jobs.push_back(job.size.str());
        break;
      case ModelKind::Restricted: {
        json entry;
        entry["size"] = job.size.str();
        json allowed = json::array();
        for (int i : job.allowed) allowed.push_back(i + 1);
        entry["allowed"] = allowed;
        jobs.push_back(entry);
        break;
      }
      case ModelKind::Unrelated: {
        json entry;
        json times = json::array();
        for (const Rational& t : job.times) times.push_back(t.str());
        entry["times"] = times;
        jobs.push_back(entry);
        break;
      }
    }
  }
  doc["jobs"] = jobs;
  return doc.dump(2) + "\n";
}

Instance load_instance_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_instance(buf.str());
}

void save_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open instance file for writing: " + path);
  os << instance_to_json_text(instance);
}

}  // namespace pricesched

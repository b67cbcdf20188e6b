#!/usr/bin/env python3
"""Regenerates the test fixtures under tests/data.

  mini/       bundled end-to-end fixture: corpus, KG subset, mock rules, config
  ablation/   incomplete-KG fixture with authored gold triples
  zh/         Chinese paragraphs used by unit tests

Every paragraph is written from a template together with the KG claims behind
it and the gold triples a careful annotator would mark in the text. Run from
the repository root; the output is deterministic.
"""

import json
import pathlib
import re

ROOT = pathlib.Path(__file__).resolve().parents[2]
DATA = ROOT / "tests" / "data"
PROPS = {json.loads(l)["pid"] for l in open(ROOT / "config" / "properties.jsonl")}


class Kg:
    def __init__(self):
        self.entities = {}
        self.order = []
        self.names = {}
        self.next_id = 90000001

    def entity(self, en, qid=None, inst=(), sub=(), zh=None, aliases=(), zh_aliases=()):
        key = en
        if key in self.names:
            return self.names[key]
        if qid is None:
            qid = f"Q{self.next_id}"
            self.next_id += 1
        e = {"qid": qid, "labels": {"en": en}, "aliases": {},
             "instance_of": list(inst), "subclass_of": list(sub), "claims": []}
        if zh:
            e["labels"]["zh"] = zh
        if aliases:
            e["aliases"]["en"] = list(aliases)
        if zh_aliases:
            e["aliases"]["zh"] = list(zh_aliases)
        self.entities[qid] = e
        self.order.append(qid)
        self.names[key] = qid
        return qid

    def q(self, name):
        return self.names[name]

    def claim(self, head, pid, tail=None, kind=None, value=None):
        assert pid in PROPS, pid
        if kind is None:
            t = {"qid": tail if tail.startswith("Q") and tail[1:].isdigit() else self.q(tail)}
        else:
            t = {"literal": {"kind": kind, "value": value}}
        h = head if head.startswith("Q") and head[1:].isdigit() else self.q(head)
        self.entities[h]["claims"].append({"pid": pid, "tail": t})

    def lines(self, keep=None):
        out = []
        for qid in self.order:
            e = dict(self.entities[qid])
            if keep is not None:
                e["claims"] = [c for c in e["claims"] if keep(qid, c)]
            out.append(json.dumps(e, ensure_ascii=False))
        return out


def classes(kg):
    c = kg.entity
    c("business", "Q4830453", sub=["Q43229"], zh="企业")
    c("educational institution", "Q2385804", sub=["Q43229"])
    c("university", "Q3918", sub=["Q2385804"], zh="大学")
    c("international organization", "Q484652", sub=["Q43229"])
    c("publisher", "Q2085381", sub=["Q4830453"])
    c("railway company", "Q249556", sub=["Q4830453"])
    c("continent", "Q5107", sub=["Q2221906"])
    c("battle", "Q178561", sub=["Q1656682"])
    c("medical specialty", "Q930752", sub=["Q11862829"])
    c("smartphone", "Q22645", sub=["Q2424752"])
    c("operating system", "Q9135", sub=["Q7397"])
    c("skyscraper", "Q11303", sub=["Q41176"])
    c("observatory", "Q62832", sub=["Q41176"])
    c("novel", "Q8261", sub=["Q7725634"])
    c("star", "Q523", sub=["Q6999"])
    c("exoplanet", "Q44559", sub=["Q6999"])
    c("constellation", "Q8928", sub=["Q6999"])
    c("state of the United States", "Q35657", sub=["Q7275"])


def human(kg, name, **kw):
    return kg.entity(name, inst=["Q5"], **kw)


def city(kg, name, **kw):
    return kg.entity(name, inst=["Q515"], **kw)


def country(kg, name, **kw):
    return kg.entity(name, inst=["Q6256"], **kw)


def company(kg, name, **kw):
    return kg.entity(name, inst=["Q4830453"], **kw)


def other(kg, name, cls="Q35120", **kw):
    return kg.entity(name, inst=[cls], **kw)


def fmt_int(n):
    return f"{n:,}"


MONTHS = ["January", "February", "March", "April", "May", "June", "July",
          "August", "September", "October", "November", "December"]


def day(iso):
    y, m, d = iso.split("-")
    return f"{MONTHS[int(m) - 1]} {int(d)}, {y}"


def month(iso):
    y, m = iso.split("-")
    return f"{MONTHS[int(m) - 1]} {y}"


# English world, one builder per domain. Each registers the KG claims behind
# a paragraph and returns its wikitext and gold triples.


def gpe(kg, v):
    country(kg, v["name"])
    kg.entity(v["continent"], inst=["Q5107"])
    country(kg, v["neighbor"])
    city(kg, v["capital"])
    kg.entity(v["language"], inst=["Q34770"])
    kg.entity(v["currency"], inst=["Q8142"])
    kg.entity(v["org"], inst=["Q484652"])
    n = v["name"]
    kg.claim(n, "P30", v["continent"])
    kg.claim(n, "P47", v["neighbor"])
    kg.claim(n, "P36", v["capital"])
    kg.claim(n, "P1082", kind="quantity", value=str(v["pop"]))
    kg.claim(n, "P37", v["language"])
    kg.claim(n, "P38", v["currency"])
    kg.claim(n, "P463", v["org"])
    kg.claim(n, "P530", v["neighbor"])
    gold = [(n, "continent", v["continent"]), (n, "shares border with", v["neighbor"]),
            (n, "capital", v["capital"]), (n, "population", fmt_int(v["pop"])),
            (n, "official language", v["language"]), (n, "currency", v["currency"]),
            (n, "member of", v["org"])]
    embassy = ""
    if v["embassy"]:
        embassy = f" The two neighbours opened embassies in each other's capitals soon after independence."
        gold.append((n, "diplomatic relation", v["neighbor"]))
    text = (f"[[{n}]] is a sovereign country in [[{v['continent']}]] that shares a long border "
            f"with [[{v['neighbor']}]]. Its capital and largest city is [[{v['capital']}]]. "
            f"According to the latest census the country has a population of {fmt_int(v['pop'])} "
            f"people, most of whom speak [[{v['language']}]], the official language of the state. "
            f"The national currency is the [[{v['currency']}]], and {n} joined the "
            f"[[{v['org']}]] in {v['joined']}.{embassy}")
    return text, gold


def event(kg, v):
    kg.entity(v["name"], inst=["Q178561"])
    city(kg, v["place"])
    n = v["name"]
    kg.claim(n, "P276", v["place"])
    for p in v["sides"]:
        kg.claim(n, "P710", p)
    kg.claim(n, "P585", kind="time", value=v["year"])
    kg.claim(n, "P580", kind="time", value=v["start"])
    kg.claim(n, "P582", kind="time", value=v["end"])
    kg.claim(n, "P1120", kind="quantity", value=str(v["deaths"]))
    gold = [(n, "location", v["place"]), (n, "participant", v["sides"][0]),
            (n, "participant", v["sides"][1]), (n, "point in time", v["year"]),
            (n, "start time", month(v["start"])), (n, "end time", month(v["end"])),
            (n, "number of deaths", fmt_int(v["deaths"]))]
    text = (f"The [[{n}]] was a battle fought near [[{v['place']}]] in {v['year']}. Forces of "
            f"[[{v['sides'][0]}]] and [[{v['sides'][1]}]] took part in the fighting, which "
            f"began in {month(v['start'])} and ended in {month(v['end'])}. Contemporary "
            f"chronicles record that {fmt_int(v['deaths'])} soldiers were killed during the "
            f"campaign. The war ended a long period of unrest in the region, and historians "
            f"still debate its causes and the decisions of the commanders on both sides.")
    return text, gold


def person(kg, v):
    human(kg, v["name"])
    city(kg, v["birthplace"])
    other(kg, v["occupation"], "Q12737077")
    kg.entity(v["school"], inst=["Q3918"])
    company(kg, v["employer"])
    human(kg, v["partner"])
    other(kg, v["award"], "Q618779")
    n = v["name"]
    kg.claim(n, "P569", kind="time", value=v["born"])
    kg.claim(n, "P19", v["birthplace"])
    kg.claim(n, "P106", v["occupation"])
    kg.claim(n, "P69", v["school"])
    kg.claim(n, "P108", v["employer"])
    kg.claim(n, "P26", v["partner"])
    kg.claim(n, "P166", v["award"])
    s, pos = v["pronoun"], "her" if v["pronoun"] == "She" else "his"
    gold = [(n, "date of birth", day(v["born"])), (n, "place of birth", v["birthplace"]),
            (n, "occupation", v["occupation"]), (n, "educated at", v["school"]),
            (n, "employer", v["employer"]), (n, "award received", v["award"])]
    if v["married"]:
        partner = (f"In {v['year']} {s.lower()} married the engineer [[{v['partner']}]], "
                   f"with whom {s.lower()} has two children.")
        gold.append((n, "spouse", v["partner"]))
    else:
        partner = (f"In {v['year']} {s.lower()} began a long collaboration with the engineer "
                   f"[[{v['partner']}]] on a series of public projects.")
    text = (f"[[{n}]] (born {day(v['born'])} in [[{v['birthplace']}]]) is a "
            f"[[{v['occupation']}]]. {s} studied at [[{v['school']}]] and later worked for "
            f"[[{v['employer']}]] for more than a decade. {partner} {v['surname']} received the "
            f"[[{v['award']}]] for {pos} contributions to the field and has written widely "
            f"about {pos} career.")
    return text, gold


def science(kg, v):
    other(kg, v["name"], "Q483247")
    kg.entity(v["field"], inst=["Q11862829"])
    human(kg, v["discoverer"])
    other(kg, v["parent"], "Q17737")
    n = v["name"]
    kg.claim(n, "P2579", v["field"])
    kg.claim(n, "P61", v["discoverer"])
    kg.claim(n, "P575", kind="time", value=v["year"])
    kg.claim(n, "P138", v["discoverer"])
    kg.claim(n, "P361", v["parent"])
    gold = [(n, "studied by", v["field"]), (n, "discoverer or inventor", v["discoverer"]),
            (n, "time of discovery or invention", v["year"]),
            (n, "named after", v["discoverer"]), (n, "part of", v["parent"])]
    text = (f"The [[{n}]] is a phenomenon studied in [[{v['field']}]]. It was discovered by "
            f"[[{v['discoverer']}]] in {v['year']} during experiments on {v['topic']}, and the "
            f"scientific community later named it after {v['discoverer']}. The effect is part of "
            f"the wider theory of [[{v['parent']}]] and has applications in laboratory "
            f"measurement, materials research and the design of precise instruments.")
    return text, gold


def product(kg, v):
    kg.entity(v["name"], inst=["Q22645"])
    company(kg, v["developer"])
    company(kg, v["maker"])
    kg.entity(v["os"], inst=["Q9135"])
    other(kg, v["material"], "Q214609")
    n = v["name"]
    kg.claim(n, "P178", v["developer"])
    kg.claim(n, "P176", v["maker"])
    kg.claim(n, "P577", kind="time", value=v["released"])
    kg.claim(n, "P306", v["os"])
    kg.claim(n, "P2067", kind="quantity", value=str(v["mass"]))
    kg.claim(n, "P186", v["material"])
    gold = [(n, "developer", v["developer"]), (n, "manufacturer", v["maker"]),
            (n, "publication date", month(v["released"])), (n, "operating system", v["os"]),
            (n, "mass", str(v["mass"])), (n, "made from material", v["material"])]
    text = (f"The [[{n}]] is a smartphone developed by [[{v['developer']}]] and manufactured "
            f"by [[{v['maker']}]]. It was released in {month(v['released'])} and runs the "
            f"[[{v['os']}]] operating system. The device weighs {v['mass']} grams and its case "
            f"is made of [[{v['material']}]]. Reviewers praised its battery life and bright "
            f"display, and the phone sold well during its first year on the market.")
    return text, gold


def creature(kg, v):
    kg.entity(v["name"], inst=["Q16521"])
    kg.entity(v["family"], inst=["Q16521"])
    country(kg, v["place"])
    other(kg, v["status"], "Q82673")
    n = v["name"]
    kg.claim(n, "P171", v["family"])
    kg.claim(n, "P183", v["place"])
    kg.claim(n, "P141", v["status"])
    kg.claim(n, "P225", kind="string", value=v["sci"])
    gold = [(n, "parent taxon", v["family"]), (n, "endemic to", v["place"]),
            (n, "IUCN conservation status", v["status"]), (n, "taxon name", v["sci"])]
    text = (f"The [[{n}]] (''{v['sci']}'') is a species of {v['kind']} in the family "
            f"[[{v['family']}]]. It is endemic to [[{v['place']}]], where it lives in "
            f"{v['habitat']}. The species feeds on insects and small invertebrates, and it is "
            f"listed as [[{v['status']}]] on the IUCN Red List. Populations have declined "
            f"because of habitat loss, and volunteers monitor several breeding sites each spring.")
    return text, gold


def building(kg, v):
    kg.entity(v["name"], inst=["Q11303"])
    city(kg, v["city"])
    human(kg, v["architect"])
    other(kg, v["style"], "Q32880")
    company(kg, v["owner"])
    n = v["name"]
    kg.claim(n, "P131", v["city"])
    kg.claim(n, "P84", v["architect"])
    kg.claim(n, "P149", v["style"])
    kg.claim(n, "P571", kind="time", value=v["year"])
    kg.claim(n, "P1101", kind="quantity", value=str(v["floors"]))
    kg.claim(n, "P127", v["owner"])
    gold = [(n, "located in the administrative territorial entity", v["city"]),
            (n, "architect", v["architect"]), (n, "architectural style", v["style"]),
            (n, "inception", v["year"]), (n, "floors above ground", str(v["floors"])),
            (n, "owned by", v["owner"])]
    text = (f"[[{n}]] is a skyscraper in [[{v['city']}]]. Designed by the architect "
            f"[[{v['architect']}]] in the [[{v['style']}]] style, the tower was completed in "
            f"{v['year']} and has {v['floors']} floors above ground. It is owned by "
            f"[[{v['owner']}]], which leases most of the office space to banks and law firms. "
            f"An observation deck on the top floor is open to visitors throughout the year.")
    return text, gold


def artwork(kg, v):
    kg.entity(v["name"], inst=["Q8261"])
    human(kg, v["author"])
    kg.entity(v["publisher"], inst=["Q2085381"])
    other(kg, v["genre"], "Q223393")
    kg.entity(v["language"], inst=["Q34770"])
    other(kg, v["award"], "Q618779")
    n = v["name"]
    kg.claim(n, "P50", v["author"])
    kg.claim(n, "P123", v["publisher"])
    kg.claim(n, "P136", v["genre"])
    kg.claim(n, "P577", kind="time", value=v["year"])
    kg.claim(n, "P407", v["language"])
    kg.claim(n, "P166", v["award"])
    gold = [(n, "author", v["author"]), (n, "publisher", v["publisher"]),
            (n, "genre", v["genre"]), (n, "publication date", v["year"]),
            (n, "language of work or name", v["language"]), (n, "award received", v["award"])]
    text = (f"[[{n}]] is a novel by [[{v['author']}]], published by [[{v['publisher']}]] in "
            f"{v['year']}. Usually classed as [[{v['genre']}]], the book follows {v['plot']}. "
            f"It was written in [[{v['language']}]] and won the [[{v['award']}]] the following "
            f"year. Critics praised its careful prose, and the novel has since been translated "
            f"into many languages and adapted for the stage.")
    return text, gold


def medicine(kg, v):
    kg.entity(v["name"], inst=["Q12136"])
    for s in v["symptoms"]:
        kg.entity(s, inst=["Q169872"])
    other(kg, v["exam"], "Q2671652")
    kg.entity(v["drug"], inst=["Q12140"])
    kg.entity(v["specialty"], inst=["Q930752"])
    n = v["name"]
    for s in v["symptoms"]:
        kg.claim(n, "P780", s)
    kg.claim(n, "P923", v["exam"])
    kg.claim(n, "P2176", v["drug"])
    kg.claim(n, "P1995", v["specialty"])
    gold = [(n, "symptoms and signs", s) for s in v["symptoms"]]
    gold += [(n, "medical examination", v["exam"]),
             (n, "drug or therapy used for treatment", v["drug"]),
             (n, "health specialty", v["specialty"])]
    text = (f"[[{n}]] is a disease that mainly affects {v['organ']}. Common symptoms include "
            f"[[{v['symptoms'][0]}]] and [[{v['symptoms'][1]}]], which usually appear within a "
            f"few days. The condition is confirmed with a [[{v['exam']}]] and is treated with "
            f"[[{v['drug']}]]. Patients are normally followed by doctors trained in "
            f"[[{v['specialty']}]], and most recover fully after several weeks of treatment.")
    return text, gold


def transport(kg, v):
    kg.entity(v["name"], inst=["Q55488"])
    kg.entity(v["line"], inst=["Q728937"])
    city(kg, v["city"])
    kg.entity(v["operator"], inst=["Q249556"])
    for s in v["adjacent"]:
        kg.entity(s, inst=["Q55488"])
    n = v["name"]
    kg.claim(n, "P81", v["line"])
    kg.claim(n, "P131", v["city"])
    kg.claim(n, "P137", v["operator"])
    kg.claim(n, "P1619", kind="time", value=v["year"])
    kg.claim(n, "P1103", kind="quantity", value=str(v["platforms"]))
    for s in v["adjacent"]:
        kg.claim(n, "P197", s)
    gold = [(n, "connecting line", v["line"]),
            (n, "located in the administrative territorial entity", v["city"]),
            (n, "operator", v["operator"]), (n, "date of official opening", v["year"]),
            (n, "number of platform tracks", str(v["platforms"]))]
    gold += [(n, "adjacent station", s) for s in v["adjacent"]]
    text = (f"[[{n}]] is a railway station on the [[{v['line']}]] in [[{v['city']}]]. The "
            f"station is operated by [[{v['operator']}]] and was opened in {v['year']}. It has "
            f"{v['platforms']} platforms and lies between [[{v['adjacent'][0]}]] and "
            f"[[{v['adjacent'][1]}]] on the line. Regional trains stop every half hour, and a "
            f"bus interchange outside the main entrance serves the surrounding districts.")
    return text, gold


def astronomy(kg, v):
    kg.entity(v["name"], inst=["Q44559"])
    kg.entity(v["star"], inst=["Q523"])
    kg.entity(v["constellation"], inst=["Q8928"])
    human(kg, v["discoverer"])
    kg.entity(v["site"], inst=["Q62832"])
    n = v["name"]
    kg.claim(n, "P397", v["star"])
    kg.claim(n, "P59", v["constellation"])
    kg.claim(n, "P61", v["discoverer"])
    kg.claim(n, "P575", kind="time", value=v["year"])
    kg.claim(n, "P65", v["site"])
    kg.claim(n, "P2146", kind="quantity", value=str(v["period"]))
    gold = [(n, "parent astronomical body", v["star"]), (n, "constellation", v["constellation"]),
            (n, "discoverer or inventor", v["discoverer"]),
            (n, "time of discovery or invention", v["year"]),
            (n, "site of astronomical discovery", v["site"]),
            (n, "orbital period", str(v["period"]))]
    text = (f"[[{n}]] is an exoplanet orbiting the star [[{v['star']}]] in the constellation "
            f"[[{v['constellation']}]]. It was discovered by [[{v['discoverer']}]] in {v['year']} "
            f"using telescopes at [[{v['site']}]]. The planet completes one orbit every "
            f"{v['period']} days, and astronomers believe it is a gas giant somewhat larger than "
            f"Jupiter with a thick atmosphere of hydrogen and helium.")
    return text, gold


def organization(kg, v):
    company(kg, v["name"])
    human(kg, v["founder"])
    city(kg, v["hq"])
    other(kg, v["product"], "Q2424752")
    human(kg, v["ceo"])
    company(kg, v["parent"])
    n = v["name"]
    kg.claim(n, "P571", kind="time", value=v["year"])
    kg.claim(n, "P112", v["founder"])
    kg.claim(n, "P159", v["hq"])
    kg.claim(n, "P1056", v["product"])
    kg.claim(n, "P1128", kind="quantity", value=str(v["employees"]))
    kg.claim(n, "P169", v["ceo"])
    kg.claim(n, "P749", v["parent"])
    gold = [(n, "inception", v["year"]), (n, "founded by", v["founder"]),
            (n, "headquarters location", v["hq"]), (n, "product or material produced", v["product"]),
            (n, "employees", fmt_int(v["employees"])), (n, "chief executive officer", v["ceo"]),
            (n, "parent organization", v["parent"])]
    text = (f"[[{n}]] is a {v['kind']} company founded in {v['year']} by [[{v['founder']}]]. "
            f"Headquartered in [[{v['hq']}]], the company makes [[{v['product']}]] and employs "
            f"about {fmt_int(v['employees'])} people. Its chief executive is [[{v['ceo']}]], who "
            f"took over from the founder in {v['ceo_year']}. Since {v['acquired']} the firm has "
            f"been a subsidiary of [[{v['parent']}]], although it keeps its own brand.")
    return text, gold


WORLD = {
    "GPE": (gpe, [
        dict(name="Veloria", continent="Europe", neighbor="Durmark", capital="Port Anselm",
             pop=2431000, language="Velorian", currency="Velorian crown",
             org="Northern Maritime Council", joined=1994, embassy=True),
        dict(name="Kestria", continent="Asia", neighbor="Oran Valis", capital="Tessaly",
             pop=18250400, language="Kestrian", currency="Kestrian mark",
             org="Eastern Trade Union", joined=2003, embassy=False),
        dict(name="Marenland", continent="Africa", neighbor="Solbarra", capital="Nuvo Kasa",
             pop=7604000, language="Marenese", currency="Maren shilling",
             org="Coastal States Forum", joined=1988, embassy=True),
        dict(name="Ardesia", continent="South America", neighbor="Pelluca", capital="San Ivo",
             pop=5120900, language="Ardesian", currency="Ardesian peso",
             org="Andean Water Compact", joined=2011, embassy=False),
    ]),
    "Event": (event, [
        dict(name="Battle of Karth", place="Karth", sides=["Veloria", "Durmark"], year="1643",
             start="1643-05", end="1643-09", deaths=1200),
        dict(name="Battle of Lune Ford", place="Lune Ford", sides=["Kestria", "Oran Valis"],
             year="1718", start="1718-03", end="1718-04", deaths=860),
        dict(name="Battle of Sarrow Hill", place="Sarrow", sides=["Marenland", "Solbarra"],
             year="1802", start="1802-06", end="1802-07", deaths=3400),
        dict(name="Battle of Tiber Reach", place="Tiber Reach", sides=["Ardesia", "Pelluca"],
             year="1879", start="1879-01", end="1879-02", deaths=540),
    ]),
    "Person": (person, [
        dict(name="Mira Castell", surname="Castell", born="1971-03-14", birthplace="Tessaly",
             occupation="civil engineer", school="University of Halden",
             employer="Brightwater Holdings", partner="Jonas Freel", year=1999,
             award="Halden Medal", pronoun="She", married=True),
        dict(name="Arno Vitale", surname="Vitale", born="1965-11-02", birthplace="San Ivo",
             occupation="economist", school="Ravel Institute", employer="Corvane Group",
             partner="Lena Hoss", year=1993, award="Piet Prize", pronoun="He", married=False),
        dict(name="Selin Okafor", surname="Okafor", born="1980-07-21", birthplace="Nuvo Kasa",
             occupation="architect", school="Marin Polytechnic", employer="Oakline Partners",
             partner="Teo Brandt", year=2008, award="Solace Award", pronoun="She", married=True),
        dict(name="Haldor Quist", surname="Quist", born="1958-01-30", birthplace="Port Anselm",
             occupation="journalist", school="Westmark College", employer="Daily Lantern Media",
             partner="Ines Varga", year=1986, award="Graves Prize", pronoun="He", married=False),
    ]),
    "Science": (science, [
        dict(name="Halvorsen effect", field="solid-state physics", discoverer="Anna Halvorsen",
             year="1921", topic="thin metal films", parent="electron transport theory"),
        dict(name="Brisco resonance", field="acoustics", discoverer="Paul Brisco", year="1897",
             topic="vibrating glass plates", parent="wave mechanics"),
        dict(name="Tamura shift", field="spectroscopy", discoverer="Keiko Tamura", year="1958",
             topic="excited gas molecules", parent="quantum optics"),
        dict(name="Lindqvist drift", field="plasma physics", discoverer="Erik Lindqvist",
             year="1972", topic="magnetized plasmas", parent="magnetohydrodynamics"),
    ]),
    "Product": (product, [
        dict(name="Lumen X2", developer="Lumen Labs", maker="Corvane Group", released="2019-03",
             os="Harbor OS", mass=185, material="anodized aluminium"),
        dict(name="Nimbus Pro", developer="Nimbus Devices", maker="Tessaly Electronics",
             released="2020-10", os="Harbor OS", mass=201, material="ceramic"),
        dict(name="Pica One", developer="Pica Mobile", maker="Corvane Group", released="2017-06",
             os="Sable", mass=158, material="polycarbonate"),
        dict(name="Orro 5", developer="Orro Systems", maker="Brightwater Holdings",
             released="2021-02", os="Sable", mass=172, material="stainless steel"),
    ]),
    "Creature": (creature, [
        dict(name="marbled newt", sci="Triturus velorensis", kind="salamander",
             family="Salamandridae", place="Veloria", habitat="cold mountain streams",
             status="Vulnerable"),
        dict(name="Kestrian pika", sci="Ochotona kestriae", kind="small mammal",
             family="Ochotonidae", place="Kestria", habitat="rocky alpine meadows",
             status="Endangered"),
        dict(name="golden reed frog", sci="Hyperolius aureus", kind="frog",
             family="Hyperoliidae", place="Marenland", habitat="coastal swamps",
             status="Near Threatened"),
        dict(name="Ardesian pit viper", sci="Bothrops ardesiae", kind="snake",
             family="Viperidae", place="Ardesia", habitat="dry forest clearings",
             status="Least Concern"),
    ]),
    "Building": (building, [
        dict(name="Orsino Tower", city="Port Anselm", architect="Lucia Orsino",
             style="Art Deco", year="1931", floors=42, owner="Brightwater Holdings"),
        dict(name="Meridian Spire", city="Tessaly", architect="Daniel Kroft", style="postmodern",
             year="1989", floors=61, owner="Corvane Group"),
        dict(name="Halden Exchange", city="Nuvo Kasa", architect="Amara Diop", style="brutalist",
             year="1974", floors=28, owner="Oakline Partners"),
        dict(name="Sol Tower", city="San Ivo", architect="Rafael Munt", style="high-tech",
             year="2008", floors=55, owner="Daily Lantern Media"),
    ]),
    "Artworks": (artwork, [
        dict(name="The Salt Road", author="Ilse Marrow", publisher="Grey Heron Press",
             year="1962", genre="historical fiction",
             plot="a family of traders crossing the desert", language="Velorian",
             award="Halden Book Prize"),
        dict(name="Glass Orchards", author="Tomas Reyne", publisher="Lantern House",
             year="1987", genre="magical realism", plot="three sisters who inherit a strange farm",
             language="Ardesian", award="Piet Prize for Fiction"),
        dict(name="Winter at Kestel", author="Yara Benn", publisher="Grey Heron Press",
             year="2004", genre="crime fiction", plot="a detective in a snowed-in village",
             language="Kestrian", award="Northern Dagger"),
        dict(name="The Ninth Lantern", author="Ode Malik", publisher="Coral Books", year="2015",
             genre="science fiction", plot="the crew of a slow colony ship",
             language="Marenese", award="Aster Award"),
    ]),
    "Medicine": (medicine, [
        dict(name="Karth fever", organ="the liver", symptoms=["high fever", "jaundice"],
             exam="blood smear test", drug="velamycin", specialty="infectious disease medicine"),
        dict(name="Lune syndrome", organ="the lungs", symptoms=["dry cough", "chest pain"],
             exam="chest radiograph", drug="orvastatin", specialty="pulmonology"),
        dict(name="Sarrow palsy", organ="the facial nerves", symptoms=["facial weakness", "ear pain"],
             exam="nerve conduction study", drug="prednisolone", specialty="neurology"),
        dict(name="Tiber rash", organ="the skin", symptoms=["itching", "red patches"],
             exam="skin biopsy", drug="clobetasol", specialty="dermatology"),
    ]),
    "Transport": (transport, [
        dict(name="Anselm Central", line="Coast Line", city="Port Anselm",
             operator="Velorian Railways", year="1887", platforms=8,
             adjacent=["Harbour Gate", "Millbank"]),
        dict(name="Tessaly North", line="Valley Line", city="Tessaly", operator="Kestrail",
             year="1912", platforms=4, adjacent=["Tessaly Central", "Orchard Row"]),
        dict(name="Kasa Junction", line="Savanna Line", city="Nuvo Kasa",
             operator="Maren Rail", year="1956", platforms=6, adjacent=["Kasa Port", "Ember Hill"]),
        dict(name="San Ivo Sur", line="Southern Line", city="San Ivo",
             operator="Ferrovia Ardesia", year="1998", platforms=3,
             adjacent=["Plaza Norte", "Rio Claro"]),
    ]),
    "Astronomy": (astronomy, [
        dict(name="Kepler-1652c", star="Kepler-1652", constellation="Cygnus",
             discoverer="Hana Ritter", year="2017", site="Whitfield Observatory", period=38),
        dict(name="HD 41004 Bd", star="HD 41004 B", constellation="Pictor",
             discoverer="Marco Zane", year="2004", site="La Cima Observatory", period=13),
        dict(name="TOI-2180 b", star="TOI-2180", constellation="Draco",
             discoverer="Priya Anand", year="2022", site="Mount Basel Observatory", period=261),
        dict(name="WASP-201 b", star="WASP-201", constellation="Lepus",
             discoverer="Oskar Lind", year="2011", site="Sutherland Observatory", period=5),
    ]),
    "Organization": (organization, [
        dict(name="Brightwater Holdings", kind="engineering", year="1978", founder="Edda Rowan",
             hq="Port Anselm", product="water turbines", employees=12400, ceo="Pavel Strom",
             ceo_year=2012, acquired=2016, parent="Corvane Group"),
        dict(name="Lumen Labs", kind="technology", year="2009", founder="Iris Kwan",
             hq="Tessaly", product="mobile chips", employees=3100, ceo="Dario Feld",
             ceo_year=2018, acquired=2020, parent="Tessaly Electronics"),
        dict(name="Oakline Partners", kind="design", year="1995", founder="Samuel Oake",
             hq="Nuvo Kasa", product="modular housing", employees=860, ceo="Nadia Okoye",
             ceo_year=2015, acquired=2019, parent="Corvane Group"),
        dict(name="Pica Mobile", kind="telecommunications", year="2001", founder="Leo Pica",
             hq="San Ivo", product="prepaid phones", employees=5200, ceo="Marta Luz",
             ceo_year=2014, acquired=2017, parent="Nimbus Devices"),
    ]),
}

DOMAIN_ORDER = ["GPE", "Event", "Person", "Science", "Product", "Creature", "Building",
                "Artworks", "Medicine", "Transport", "Astronomy", "Organization"]


def special_entities(kg):
    """The entities behind the paragraphs quoted in the paper."""
    apple = company(kg, "Apple Inc.", qid="Q312", zh="苹果公司", aliases=["Apple"],
                    zh_aliases=["苹果", "蘋果"])
    fruit = other(kg, "apple", "Q1364", qid="Q89", zh="苹果", aliases=["Apple"],
                  zh_aliases=["蘋果"])
    human(kg, "Tim Cook", qid="Q265852", zh="蒂姆·库克",
          aliases=["Timothy Cook", "Timothy Donald Cook"], zh_aliases=["库克"])
    human(kg, "Steve Jobs", qid="Q19837", zh="史蒂夫·乔布斯", zh_aliases=["乔布斯"])
    other(kg, "business executive", "Q12737077", qid="Q43845", zh="企业高管")
    kg.entity("Auburn University", qid="Q1190812", inst=["Q3918"], zh="奥本大学")
    city(kg, "Cupertino", qid="Q189471", zh="库比蒂诺")
    country(kg, "United States", qid="Q30", zh="美国", aliases=["United States of America"])
    country(kg, "China", qid="Q148", zh="中国", aliases=["People's Republic of China"],
            zh_aliases=["中华人民共和国"])
    country(kg, "Japan", qid="Q17", zh="日本")
    city(kg, "Beijing", qid="Q956", zh="北京")
    city(kg, "Tokyo", qid="Q1490", zh="东京")
    kg.entity("pomology", qid="Q1142970", inst=["Q11862829"], zh="果树学")
    company(kg, "Qiqi Technology", zh="奇奇科技")
    human(kg, "Wen Qiqi", zh="温琦琦")

    kg.claim("Q312", "P169", "Q265852")
    kg.claim("Q312", "P112", "Q19837")
    kg.claim("Q312", "P159", "Q189471")
    kg.claim("Q312", "P571", kind="time", value="1976-04-01")
    kg.claim("Q312", "P17", "Q30")
    kg.claim("Q89", "P2579", "Q1142970")
    kg.claim("Q265852", "P108", "Q312")
    kg.claim("Q265852", "P569", kind="time", value="1960-11-01")
    kg.claim("Q265852", "P106", "Q43845")
    kg.claim("Q265852", "P69", "Q1190812")
    kg.claim("Q265852", "P27", "Q30")
    kg.claim("Q19837", "P570", kind="time", value="2011")
    kg.claim("Q19837", "P569", kind="time", value="1955-02-24")
    kg.claim("Q19837", "P108", "Q312")
    kg.claim("Q148", "P530", "Q17")
    kg.claim("Q148", "P36", "Q956")
    kg.claim("Q17", "P36", "Q1490")
    kg.claim("Qiqi Technology", "P17", "Q148")
    kg.claim("Qiqi Technology", "P112", "Wen Qiqi")
    kg.claim("Qiqi Technology", "P571", kind="time", value="2009")
    return apple, fruit


TIM_COOK = (
    "[[Tim Cook|Timothy Cook]] (born November 1, 1960), is a [[business executive]]. He "
    "currently serves as the CEO of [[Apple Inc.|Apple]]. After [[Steve Jobs]] left the company, "
    "Cook was appointed as the CEO in 2011. Earlier in his career he studied industrial "
    "engineering at [[Auburn University]] and worked in computer manufacturing before he joined "
    "Apple in 1998.")
TIM_COOK_GOLD = [("Timothy Cook", "date of birth", "November 1, 1960"),
                 ("Timothy Cook", "occupation", "business executive"),
                 ("Timothy Cook", "employer", "Apple"),
                 ("Timothy Cook", "educated at", "Auburn University"),
                 ("Steve Jobs", "employer", "Apple")]

QIQI = (
    "[[Qiqi Technology]] has strongholds in both [[China]] and [[Japan]]. The company was "
    "founded in 2009 by the engineer [[Wen Qiqi]] and builds payment terminals for small "
    "shops and market stalls. Its research teams work from offices in several cities, and the "
    "firm sells most of its hardware through local distributors rather than its own stores.")
QIQI_GOLD = [("Qiqi Technology", "country", "China"), ("Qiqi Technology", "country", "Japan"),
             ("Qiqi Technology", "founded by", "Wen Qiqi"),
             ("Qiqi Technology", "inception", "2009")]

ZH_DOCS = [
    ("zh-cook", "蒂姆·库克",
     "[[蒂姆·库克]]（1960年11月1日－），美国[[企业高管]]，现任[[苹果公司|蘋果]]首席执行官。"
     "[[史蒂夫·乔布斯]]离开公司后，库克于2011年被任命为首席执行官。他早年在[[奥本大学]]学习工业工程，"
     "之后在多家电脑制造企业任职，1998年加入蘋果，负责全球运营与供应链管理。"),
    ("zh-china", "中国",
     "[[中国]]位于亚洲东部，首都是[[北京]]。中国与[[日本]]隔海相望，两国于1972年建立外交关系，"
     "此后在经济、文化和教育等领域保持密切交流。日本的首都是[[东京]]，两国首都之间每天都有大量航班往返，"
     "旅游和留学人数也在不断增长。"),
    ("zh-qiqi", "奇奇科技",
     "[[奇奇科技]]在[[中国]]和[[日本]]都设有据点。公司由工程师[[温琦琦]]于2009年创办，"
     "主要为小商店和市场摊位生产支付终端。公司的研发团队分布在多个城市，产品主要通过当地经销商销售，"
     "而不是通过自己的门店。"),
    ("zh-jobs", "史蒂夫·乔布斯",
     "[[史蒂夫·乔布斯]]出生于1955年2月24日，是[[苹果公司]]的联合创始人之一。他与合伙人在车库中创办公司，"
     "推出了多款改变个人电脑和手机行业的产品。乔布斯于2011年逝世，此前他长期担任公司首席执行官，"
     "以注重设计和用户体验而闻名。"),
]


def filler_docs():
    """Blocks the ingest stage must drop: one too short, one with a broken link."""
    return [
        {"id": "noise-short", "lang": "en", "title": "Stub",
         "wikitext": "== Stub ==\n[[Veloria]] is a country.\n\n'''Notes''' pending review."},
        {"id": "noise-broken", "lang": "en", "title": "Broken",
         "wikitext": "The [[Battle of Karth was fought in 1643 and is remembered in songs that "
                     "travellers still sing along the coast road, in taverns and at weddings, "
                     "long after the last veterans of the campaign had died and the old fort "
                     "walls had been pulled down for stone by farmers building new houses "
                     "across the valley."},
    ]


def mock_rules(templates):
    stop = {"en": set(), "zh": set()}
    for lang in ("en", "zh"):
        for label, ts in templates[lang]["templates"].items():
            for t in ts:
                t = t.replace("[X]", " ").replace("[Y]", " ")
                if lang == "en":
                    stop[lang].update(w.lower() for w in re.findall(r"\w+", t))
                else:
                    stop[lang].update(c for c in t if "぀" <= c <= "鿿")
    kw = {
        "GPE": ["country", "capital", "census", "currency", "sovereign", "border",
                "国家", "首都", "外交关系"],
        "Event": ["battle", "fought", "forces", "chronicles", "soldiers", "commanders"],
        "Person": ["born", "married", "studied", "career", "children", "his", "her",
                   "出生", "早年", "任职", "加入"],
        "Science": ["phenomenon", "discovered", "experiments", "theory", "scientific"],
        "Product": ["smartphone", "device", "released", "display", "phone", "grams"],
        "Creature": ["species", "family", "endemic", "habitat", "iucn", "breeding"],
        "Building": ["skyscraper", "tower", "architect", "floors", "observation"],
        "Artworks": ["novel", "book", "published", "prose", "translated", "fiction"],
        "Medicine": ["disease", "symptoms", "treated", "patients", "treatment"],
        "Transport": ["railway", "station", "platforms", "trains", "line", "bus"],
        "Astronomy": ["exoplanet", "orbit", "orbiting", "constellation", "telescopes", "astronomers"],
        "Organization": ["company", "founded", "headquartered", "employs", "subsidiary", "firm",
                         "公司", "创办"],
    }
    ner_en = ["Cupertino", "United States", "Jupiter", "Tessaly Central"]
    ner_zh = ["库克", "乔布斯", "蘋果", "北京"]
    name = r"([A-Z][\w-]*(?: [A-Z][\w-]*)*)"
    extract = [
        {"lang": "en", "pattern": name + r" is a [a-z ]+ company founded in (\d{4})",
         "relation": "inception", "head_type": "Organization"},
        {"lang": "en", "pattern": name + r" is a [a-z ]+ company founded in \d{4} by " + name,
         "head_group": 1, "tail_group": 2, "relation": "founded by",
         "head_type": "Organization"},
        {"lang": "en", "pattern": r"\[?" + name + r" \(born ([A-Z][a-z]+ \d{1,2}, \d{4})",
         "relation": "date of birth", "head_type": "Person"},
        {"lang": "en", "pattern": name + r" is a railway station on the " + name + r" in",
         "relation": "connecting line", "head_type": "Transport"},
        {"lang": "en", "pattern": name + r" is a novel by " + name,
         "relation": "author", "head_type": "Artwork"},
        {"lang": "en", "pattern": r"Forces of " + name + r" and " + name + r" took part",
         "relation": "diplomatic relation", "head_type": "GPE"},
        {"lang": "zh", "pattern": r"(蒂姆·库克)（(\d{4}年\d{1,2}月\d{1,2}日)",
         "relation": "出生日期", "head_type": "Person"},
    ]
    cues = [
        {"lang": "en", "hypothesis_any": ["died", "death"],
         "premise_any": ["died", "death", "passed away"]},
        {"lang": "en", "hypothesis_any": ["married", "spouse"],
         "premise_any": ["married", "wife", "husband", "spouse"]},
        {"lang": "en", "hypothesis_any": ["diplomatic"],
         "premise_any": ["diplomatic", "embassy", "embassies", "ambassador"]},
        {"lang": "zh", "hypothesis_any": ["逝世"], "premise_any": ["逝世", "去世"]},
        {"lang": "zh", "hypothesis_any": ["外交"], "premise_any": ["外交", "大使"]},
    ]
    return {
        "classify": {"rules": [{"domain": d, "keywords": kw[d]} for d in DOMAIN_ORDER],
                     "fallback": "GPE"},
        "ner": {"en": ner_en, "zh": ner_zh},
        "extract": extract,
        "entail": {"high": 0.9, "low": 0.1, "min_coverage": 1.0,
                   "stopwords": {k: sorted(v) for k, v in stop.items()},
                   "cues": cues},
    }


def write_lines(path, lines):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for l in lines:
            f.write(l + "\n")


def dump(obj):
    return json.dumps(obj, ensure_ascii=False)


def main():
    kg = Kg()
    classes(kg)
    special_entities(kg)
    docs, gold = [], {}
    for domain in DOMAIN_ORDER:
        build, variants = WORLD[domain]
        for i, v in enumerate(variants):
            text, g = build(kg, v)
            doc_id = f"{domain.lower()}-{i + 1}"
            docs.append({"id": doc_id, "lang": "en", "title": v["name"], "wikitext": text})
            gold[f"{doc_id}#0"] = (domain, g)
    docs.append({"id": "cook", "lang": "en", "title": "Tim Cook", "wikitext": TIM_COOK})
    gold["cook#0"] = ("Person", TIM_COOK_GOLD)
    docs.append({"id": "qiqi", "lang": "en", "title": "Qiqi Technology", "wikitext": QIQI})
    gold["qiqi#0"] = ("Organization", QIQI_GOLD)
    zh_docs = [{"id": i, "lang": "zh", "title": t, "wikitext": w} for i, t, w in ZH_DOCS]

    templates = {l: json.load(open(ROOT / "config" / f"templates.{l}.json", encoding="utf-8"))
                 for l in ("en", "zh")}
    rules = mock_rules(templates)

    # Bundled end-to-end fixture: 46 English paragraphs, 4 Chinese ones and
    # two blocks that ingest drops.
    en_docs = docs[:44] + docs[-2:]
    mini = DATA / "mini"
    corpus = en_docs + zh_docs + filler_docs()
    write_lines(mini / "corpus.jsonl", [dump(d) for d in corpus])
    write_lines(mini / "kg.jsonl", kg.lines())
    (mini / "mock_rules.json").write_text(
        json.dumps(rules, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
    base = {
        "corpus": "corpus.jsonl", "kg": "kg.jsonl",
        "properties": "../../../config/properties.jsonl",
        "taxonomy": "../../../config/taxonomy.json",
        "mappers": "../../../config/mappers.json",
        "templates": {"en": "../../../config/templates.en.json",
                      "zh": "../../../config/templates.zh.json"},
        "instructions": "../../../config/instructions.json",
        "date_patterns": "../../../config/date_patterns.json",
        "caps": "../../../config/caps.json",
        "mock_rules": "mock_rules.json",
        "seed": 7, "nli_threshold": 0.5, "sampler_k": 1.0,
        "min_tokens": 50, "max_tokens": 512,
        "mock_backends": True, "threads": 1,
        "backend": {"url": "http://127.0.0.1:8765", "timeout_ms": 10000,
                    "max_in_flight": 8, "retry_budget": 3},
    }
    (mini / "pipeline.json").write_text(
        json.dumps(dict(base, work_dir="work"), indent=1) + "\n")

    # Ablation fixture: one paragraph per domain plus the two quoted ones,
    # over a KG with some claims removed. The KG keeps the unsupported
    # spouse and diplomatic claims, which only the entailment filter removes.
    abl = DATA / "ablation"
    picks = [d for d in docs if d["id"].endswith("-2") or d["id"] in ("cook", "qiqi")]
    write_lines(abl / "corpus.jsonl", [dump(d) for d in picks])
    hidden = {
        (kg.q("Lumen Labs"), "P571"), (kg.q("Lumen Labs"), "P112"),
        (kg.q("Pica Mobile"), "P571"), (kg.q("Pica Mobile"), "P112"),
        (kg.q("Tessaly North"), "P81"), (kg.q("Glass Orchards"), "P50"),
        (kg.q("Winter at Kestel"), "P50"), (kg.q("Arno Vitale"), "P569"),
        (kg.q("Qiqi Technology"), "P112"), (kg.q("Qiqi Technology"), "P571"),
    }
    write_lines(abl / "kg.jsonl", kg.lines(lambda q, c: (q, c["pid"]) not in hidden))
    (abl / "mock_rules.json").write_text(
        json.dumps(rules, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
    abl_cfg = dict(base, work_dir="work", sampler_k=1000.0)
    (abl / "pipeline.json").write_text(json.dumps(abl_cfg, indent=1) + "\n")
    gold_lines = []
    for d in picks:
        pid = d["id"] + "#0"
        domain, g = gold[pid]
        gold_lines.append(dump({"id": pid, "lang": "en", "domain": domain,
                                "triples": [{"head": h, "relation": r, "tail": t}
                                            for h, r, t in g]}))
    write_lines(abl / "gold.jsonl", gold_lines)

    # Gold for every English fixture paragraph, used by the linker and matcher
    # oracles.
    write_lines(mini / "gold.jsonl", [
        dump({"id": pid, "domain": dom, "triples": [{"head": h, "relation": r, "tail": t}
                                                    for h, r, t in g]})
        for pid, (dom, g) in gold.items()])

    zh = DATA / "zh"
    write_lines(zh / "corpus.jsonl", [dump(d) for d in zh_docs])
    print(f"mini: {len(corpus)} documents, {len(kg.order)} entities; "
          f"ablation: {len(picks)} paragraphs")


if __name__ == "__main__":
    main()

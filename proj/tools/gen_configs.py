#!/usr/bin/env python3
"""Regenerates config/mappers.json, config/templates.{en,zh}.json and
config/properties.jsonl.

The relation inventory lives in RELATIONS below; each row is
(pid, en label, zh label, head types, tail types, domains, en sentence,
zh sentence). Run from the repository root.
"""

import json
import pathlib

T = {
    "PER": "Person", "ORG": "Organization", "GPE": "GPE", "LOC": "Location",
    "EVT": "Event", "CRE": "Creature", "PRD": "Product", "ART": "Artwork",
    "BLD": "Building", "TRN": "Transport", "AST": "AstronomicalObject",
    "MED": "Medicine", "DIS": "Discipline", "LAN": "Language",
    "TIME": "Time", "QTY": "Quantity", "STR": "String", "OTH": "Other",
}

PLACE = "GPE LOC"
ANY = "PER ORG GPE LOC EVT CRE PRD ART BLD TRN AST MED DIS LAN OTH"

RELATIONS = [
    # Person
    ("P19", "place of birth", "出生地", "PER", PLACE, "Person", "[X] was born in [Y].", "[X]出生于[Y]。"),
    ("P20", "place of death", "逝世地", "PER", PLACE, "Person", "[X] died in [Y].", "[X]在[Y]逝世。"),
    ("P569", "date of birth", "出生日期", "PER", "TIME", "Person", "[X] was born on [Y].", "[X]生于[Y]。"),
    ("P570", "date of death", "逝世日期", "PER", "TIME", "Person", "[X] died on [Y].", "[X]于[Y]逝世。"),
    ("P27", "country of citizenship", "国籍", "PER", "GPE", "Person", "[X] is a citizen of [Y].", "[X]是[Y]公民。"),
    ("P106", "occupation", "职业", "PER", "OTH DIS", "Person", "[X] works as a [Y].", "[X]的工作是[Y]。"),
    ("P108", "employer", "雇主", "PER", "ORG", "Person", "[X] works for [Y].", "[X]受雇于[Y]。"),
    ("P69", "educated at", "毕业院校", "PER", "ORG", "Person", "[X] studied at [Y].", "[X]就读于[Y]。"),
    ("P26", "spouse", "配偶", "PER", "PER", "Person", "[X] is married to [Y].", "[X]与[Y]结婚。"),
    ("P22", "father", "父亲", "PER", "PER", "Person", "[Y] is the father of [X].", "[Y]是[X]的父亲。"),
    ("P25", "mother", "母亲", "PER", "PER", "Person", "[Y] is the mother of [X].", "[Y]是[X]的母亲。"),
    ("P40", "child", "子女", "PER", "PER", "Person", "[Y] is a child of [X].", "[Y]是[X]的孩子。"),
    ("P166", "award received", "所获奖项", "PER ORG ART PRD", "OTH EVT", "Person Artworks Organization", "[X] received the [Y].", "[X]获得了[Y]。"),
    ("P39", "position held", "担任职务", "PER", "OTH", "Person", "[X] served as [Y].", "[X]担任[Y]。"),
    ("P102", "member of political party", "所属政党", "PER", "ORG", "Person", "[X] is a member of the [Y].", "[X]是[Y]党员。"),
    ("P509", "cause of death", "死因", "PER", "MED OTH", "Person", "[X] died of [Y].", "[X]死于[Y]。"),
    ("P463", "member of", "所属组织", "PER ORG GPE", "ORG", "Person Organization GPE", "[X] is a member of [Y].", "[X]是[Y]的成员。"),
    ("P800", "notable work", "代表作品", "PER ORG", "ART PRD", "Person Artworks", "[X] is known for [Y].", "[X]的代表作是[Y]。"),
    ("P101", "field of work", "研究领域", "PER ORG", "DIS OTH", "Person Science", "[X] works in the field of [Y].", "[X]从事[Y]领域的工作。"),
    # Organization
    ("P159", "headquarters location", "总部位置", "ORG", PLACE + " BLD", "Organization", "[X] is headquartered in [Y].", "[X]总部位于[Y]。"),
    ("P571", "inception", "成立时间", "ORG GPE BLD EVT ART", "TIME", "Organization GPE Building", "[X] was founded in [Y].", "[X]成立于[Y]。"),
    ("P576", "dissolved, abolished or demolished date", "解散日期", "ORG GPE BLD", "TIME", "Organization Building", "[X] was dissolved in [Y].", "[X]于[Y]解散。"),
    ("P112", "founded by", "创办者", "ORG", "PER ORG", "Organization", "[X] was founded by [Y].", "[X]由[Y]创办。"),
    ("P169", "chief executive officer", "首席执行官", "ORG", "PER", "Organization", "[Y] is the CEO of [X].", "[Y]是[X]的首席执行官。"),
    ("P452", "industry", "所属行业", "ORG", "OTH DIS", "Organization", "[X] operates in the [Y] industry.", "[X]属于[Y]行业。"),
    ("P1128", "employees", "员工人数", "ORG", "QTY", "Organization", "[X] has [Y] employees.", "[X]有[Y]名员工。"),
    ("P749", "parent organization", "母公司", "ORG", "ORG", "Organization", "[X] is owned by its parent [Y].", "[X]隶属于[Y]。"),
    ("P355", "subsidiary", "子公司", "ORG", "ORG", "Organization", "[Y] is a subsidiary of [X].", "[Y]是[X]的子公司。"),
    ("P17", "country", "国家", ANY, "GPE", "Organization Building Event Transport", "[X] is in [Y].", "[X]位于[Y]。"),
    ("P127", "owned by", "所有者", "ORG BLD PRD TRN", "PER ORG GPE", "Organization Building Transport", "[X] is owned by [Y].", "[X]归[Y]所有。"),
    ("P1056", "product or material produced", "产品", "ORG", "PRD OTH", "Organization Product", "[X] produces [Y].", "[X]生产[Y]。"),
    # GPE
    ("P36", "capital", "首都", "GPE", "GPE", "GPE", "The capital of [X] is [Y].", "[X]的首都是[Y]。"),
    ("P35", "head of state", "国家元首", "GPE", "PER", "GPE", "[Y] is the head of state of [X].", "[Y]是[X]的国家元首。"),
    ("P6", "head of government", "政府首脑", "GPE", "PER", "GPE", "[Y] leads the government of [X].", "[Y]领导[X]政府。"),
    ("P37", "official language", "官方语言", "GPE", "LAN", "GPE", "[Y] is an official language of [X].", "[Y]是[X]的官方语言。"),
    ("P38", "currency", "货币", "GPE", "OTH", "GPE", "[X] uses the [Y].", "[X]使用[Y]。"),
    ("P1082", "population", "人口", "GPE", "QTY", "GPE", "[X] has a population of [Y].", "[X]人口为[Y]。"),
    ("P2046", "area", "面积", "GPE LOC BLD", "QTY", "GPE Building", "[X] covers [Y].", "[X]面积为[Y]。"),
    ("P47", "shares border with", "接壤", "GPE LOC", "GPE LOC", "GPE", "[X] borders [Y].", "[X]与[Y]接壤。"),
    ("P530", "diplomatic relation", "外交关系", "GPE", "GPE", "GPE", "[X] has diplomatic relations with [Y].", "[X]与[Y]建立了外交关系。"),
    ("P30", "continent", "所在大洲", "GPE LOC", "LOC", "GPE", "[X] is on the continent of [Y].", "[X]位于[Y]大陆。"),
    ("P131", "located in the administrative territorial entity", "所在行政区", "GPE LOC BLD ORG TRN", "GPE", "GPE Building Transport", "[X] is located in [Y].", "[X]位于[Y]境内。"),
    # Event
    ("P585", "point in time", "时间点", "EVT", "TIME", "Event", "[X] happened in [Y].", "[X]发生于[Y]。"),
    ("P580", "start time", "开始时间", "EVT", "TIME", "Event", "[X] began in [Y].", "[X]开始于[Y]。"),
    ("P582", "end time", "结束时间", "EVT", "TIME", "Event", "[X] ended in [Y].", "[X]结束于[Y]。"),
    ("P276", "location", "地点", "EVT ART ORG", PLACE + " BLD", "Event Artworks", "[X] took place in [Y].", "[X]在[Y]举行。"),
    ("P710", "participant", "参与者", "EVT", "PER ORG GPE", "Event", "[Y] took part in [X].", "[Y]参与了[X]。"),
    ("P1120", "number of deaths", "死亡人数", "EVT", "QTY", "Event", "[X] killed [Y] people.", "[X]造成[Y]人死亡。"),
    ("P664", "organizer", "组织者", "EVT", "ORG PER", "Event", "[X] was organized by [Y].", "[X]由[Y]组织。"),
    ("P1344", "participant in", "参加", "PER ORG GPE", "EVT", "Event", "[X] participated in [Y].", "[X]参加了[Y]。"),
    ("P1542", "has effect", "导致", "EVT MED", "EVT MED OTH", "Event", "[X] led to [Y].", "[X]导致了[Y]。"),
    ("P828", "has cause", "起因", "EVT MED", "EVT OTH", "Event", "[X] was caused by [Y].", "[X]由[Y]引起。"),
    ("P1346", "winner", "获胜者", "EVT", "PER ORG", "Event", "[Y] won [X].", "[Y]赢得了[X]。"),
    # Science
    ("P61", "discoverer or inventor", "发现者或发明者", "DIS PRD MED AST OTH", "PER", "Science Astronomy", "[X] was discovered by [Y].", "[X]由[Y]发现。"),
    ("P575", "time of discovery or invention", "发现或发明时间", "DIS PRD MED AST OTH", "TIME", "Science Astronomy", "[X] was discovered in [Y].", "[X]发现于[Y]。"),
    ("P2579", "studied by", "研究学科", "OTH AST MED CRE", "DIS", "Science", "[X] is studied by [Y].", "[X]是[Y]的研究对象。"),
    ("P279", "subclass of", "上位类", "DIS OTH PRD", "DIS OTH PRD", "Science", "[X] is a kind of [Y].", "[X]是一种[Y]。"),
    ("P361", "part of", "属于", ANY, ANY, "Science Astronomy Transport", "[X] is part of [Y].", "[X]是[Y]的一部分。"),
    ("P527", "has part", "包含", ANY, ANY, "Science Astronomy", "[X] includes [Y].", "[X]包含[Y]。"),
    ("P138", "named after", "命名来源", ANY, ANY, "Science Astronomy Building Transport", "[X] was named after [Y].", "[X]以[Y]命名。"),
    # Product
    ("P176", "manufacturer", "制造商", "PRD TRN", "ORG", "Product Transport", "[X] is made by [Y].", "[X]由[Y]制造。"),
    ("P178", "developer", "开发者", "PRD", "ORG PER", "Product", "[X] was developed by [Y].", "[X]由[Y]开发。"),
    ("P577", "publication date", "发布日期", "PRD ART", "TIME", "Product Artworks", "[X] was released in [Y].", "[X]发布于[Y]。"),
    ("P186", "made from material", "材料", "PRD BLD ART", "OTH PRD", "Product Building", "[X] is made of [Y].", "[X]由[Y]制成。"),
    ("P306", "operating system", "操作系统", "PRD", "PRD", "Product", "[X] runs the [Y] operating system.", "[X]搭载[Y]操作系统。"),
    ("P2067", "mass", "质量", "PRD TRN AST CRE", "QTY", "Product Astronomy", "[X] weighs [Y].", "[X]重[Y]。"),
    ("P287", "designed by", "设计者", "PRD TRN BLD", "PER ORG", "Product Transport", "[X] was designed by [Y].", "[X]由[Y]设计。"),
    # Creature
    ("P171", "parent taxon", "上级分类单元", "CRE", "CRE", "Creature", "[X] belongs to [Y].", "[X]隶属于[Y]类群。"),
    ("P105", "taxon rank", "分类等级", "CRE", "OTH", "Creature", "[X] has the rank of [Y].", "[X]的分类等级为[Y]。"),
    ("P225", "taxon name", "学名", "CRE", "STR", "Creature", "The scientific name of [X] is [Y].", "[X]的学名是[Y]。"),
    ("P1843", "taxon common name", "俗名", "CRE", "STR", "Creature", "[X] is commonly called [Y].", "[X]俗称[Y]。"),
    ("P141", "IUCN conservation status", "保护状况", "CRE", "OTH", "Creature", "[X] is listed as [Y].", "[X]被列为[Y]。"),
    ("P183", "endemic to", "特有于", "CRE", PLACE, "Creature", "[X] is found only in [Y].", "[X]仅分布于[Y]。"),
    # Building
    ("P84", "architect", "建筑师", "BLD", "PER ORG", "Building", "[X] was designed by the architect [Y].", "[X]由建筑师[Y]设计。"),
    ("P149", "architectural style", "建筑风格", "BLD", "OTH", "Building", "[X] is built in the [Y] style.", "[X]采用[Y]风格。"),
    ("P1101", "floors above ground", "地上楼层数", "BLD", "QTY", "Building", "[X] has [Y] floors.", "[X]地上有[Y]层。"),
    ("P88", "commissioned by", "委托者", "BLD ART TRN", "PER ORG GPE", "Building Artworks", "[X] was commissioned by [Y].", "[X]受[Y]委托建造。"),
    ("P1435", "heritage designation", "遗产级别", "BLD LOC", "OTH", "Building", "[X] is designated a [Y].", "[X]被列为[Y]。"),
    ("P1619", "date of official opening", "正式开放日期", "BLD TRN", "TIME", "Building Transport", "[X] opened in [Y].", "[X]于[Y]正式开放。"),
    # Artworks
    ("P50", "author", "作者", "ART", "PER", "Artworks", "[X] was written by [Y].", "[X]的作者是[Y]。"),
    ("P57", "director", "导演", "ART", "PER", "Artworks", "[X] was directed by [Y].", "[X]由[Y]执导。"),
    ("P86", "composer", "作曲者", "ART", "PER", "Artworks", "[X] was composed by [Y].", "[X]由[Y]作曲。"),
    ("P161", "cast member", "演员", "ART", "PER", "Artworks", "[Y] appears in [X].", "[Y]出演了[X]。"),
    ("P170", "creator", "创作者", "ART", "PER ORG", "Artworks", "[X] was created by [Y].", "[X]由[Y]创作。"),
    ("P136", "genre", "体裁", "ART", "OTH", "Artworks", "[X] is a work of [Y].", "[X]属于[Y]作品。"),
    ("P495", "country of origin", "原产国", "ART PRD", "GPE", "Artworks Product", "[X] comes from [Y].", "[X]来自[Y]。"),
    ("P123", "publisher", "出版者", "ART PRD", "ORG", "Artworks", "[X] was published by [Y].", "[X]由[Y]出版。"),
    ("P272", "production company", "制作公司", "ART", "ORG", "Artworks", "[X] was produced by [Y].", "[X]由[Y]出品。"),
    ("P195", "collection", "收藏机构", "ART", "ORG BLD", "Artworks", "[X] is held by [Y].", "[X]收藏于[Y]。"),
    ("P180", "depicts", "描绘对象", "ART", ANY, "Artworks", "[X] depicts [Y].", "[X]描绘了[Y]。"),
    ("P175", "performer", "表演者", "ART", "PER ORG", "Artworks", "[X] is performed by [Y].", "[X]由[Y]演唱。"),
    ("P407", "language of work or name", "作品语言", "ART", "LAN", "Artworks", "[X] is written in [Y].", "[X]使用[Y]写成。"),
    # Medicine
    ("P780", "symptoms and signs", "症状", "MED", "MED OTH", "Medicine", "[X] causes [Y].", "[X]的症状包括[Y]。"),
    ("P2176", "drug or therapy used for treatment", "治疗药物", "MED", "MED", "Medicine", "[X] is treated with [Y].", "[X]可用[Y]治疗。"),
    ("P923", "medical examination", "医学检查", "MED", "OTH MED", "Medicine", "[X] is diagnosed by [Y].", "[X]通过[Y]诊断。"),
    ("P1995", "health specialty", "医学专科", "MED", "DIS", "Medicine", "[X] is handled by [Y].", "[X]属于[Y]专科。"),
    ("P2175", "medical condition treated", "适应症", "MED", "MED", "Medicine", "[X] treats [Y].", "[X]用于治疗[Y]。"),
    ("P769", "significant drug interaction", "药物相互作用", "MED", "MED", "Medicine", "[X] interacts with [Y].", "[X]与[Y]相互作用。"),
    ("P1050", "medical condition", "所患疾病", "PER", "MED", "Medicine Person", "[X] suffered from [Y].", "[X]患有[Y]。"),
    ("P636", "route of administration", "给药途径", "MED", "OTH", "Medicine", "[X] is given by [Y].", "[X]通过[Y]给药。"),
    # Transport
    ("P81", "connecting line", "连接线路", "TRN", "TRN", "Transport", "[X] is served by [Y].", "[X]有[Y]经过。"),
    ("P197", "adjacent station", "相邻车站", "TRN", "TRN", "Transport", "[X] is next to [Y].", "[X]与[Y]相邻。"),
    ("P16", "transport network", "交通网络", "TRN", "TRN ORG", "Transport", "[X] is part of the [Y] network.", "[X]属于[Y]网络。"),
    ("P137", "operator", "运营者", "TRN BLD", "ORG", "Transport Building", "[X] is operated by [Y].", "[X]由[Y]运营。"),
    ("P2043", "length", "长度", "TRN LOC BLD", "QTY", "Transport", "[X] is [Y] long.", "[X]长[Y]。"),
    ("P1092", "total produced", "产量", "TRN PRD", "QTY", "Transport Product", "[Y] units of [X] were built.", "[X]共生产了[Y]辆。"),
    ("P516", "powered by", "动力来源", "TRN PRD", "PRD OTH", "Transport", "[X] is powered by [Y].", "[X]由[Y]驱动。"),
    ("P729", "service entry", "投入使用时间", "TRN PRD", "TIME", "Transport", "[X] entered service in [Y].", "[X]于[Y]投入使用。"),
    ("P730", "service retirement", "退役时间", "TRN PRD", "TIME", "Transport", "[X] was retired in [Y].", "[X]于[Y]退役。"),
    ("P609", "terminus location", "终点", "TRN", PLACE + " TRN", "Transport", "[X] ends at [Y].", "[X]的终点是[Y]。"),
    ("P1103", "number of platform tracks", "站台数", "TRN", "QTY", "Transport", "[X] has [Y] platforms.", "[X]有[Y]个站台。"),
    ("P532", "port of registry", "船籍港", "TRN", "GPE LOC", "Transport", "[X] is registered in [Y].", "[X]的船籍港是[Y]。"),
    # Astronomy
    ("P397", "parent astronomical body", "母天体", "AST", "AST", "Astronomy", "[X] orbits [Y].", "[X]环绕[Y]运行。"),
    ("P398", "child astronomical body", "子天体", "AST", "AST", "Astronomy", "[Y] orbits [X].", "[Y]环绕[X]运行。"),
    ("P59", "constellation", "星座", "AST", "AST", "Astronomy", "[X] lies in [Y].", "[X]位于[Y]。"),
    ("P2583", "distance from Earth", "与地球距离", "AST", "QTY", "Astronomy", "[X] is [Y] from Earth.", "[X]距地球[Y]。"),
    ("P2120", "radius", "半径", "AST", "QTY", "Astronomy", "[X] has a radius of [Y].", "[X]半径为[Y]。"),
    ("P2146", "orbital period", "轨道周期", "AST", "QTY", "Astronomy", "[X] completes an orbit in [Y].", "[X]的公转周期为[Y]。"),
    ("P215", "spectral class", "光谱类型", "AST", "STR OTH", "Astronomy", "[X] has spectral class [Y].", "[X]的光谱类型为[Y]。"),
    ("P1096", "orbital eccentricity", "轨道偏心率", "AST", "QTY", "Astronomy", "[X] has an eccentricity of [Y].", "[X]的轨道偏心率为[Y]。"),
    ("P376", "located on astronomical body", "所在天体", "LOC BLD AST", "AST", "Astronomy", "[X] is located on [Y].", "[X]位于[Y]上。"),
    ("P65", "site of astronomical discovery", "发现地点", "AST", "BLD ORG LOC", "Astronomy", "[X] was discovered at [Y].", "[X]在[Y]被发现。"),
    ("P1457", "absolute magnitude", "绝对星等", "AST", "QTY", "Astronomy", "[X] has an absolute magnitude of [Y].", "[X]的绝对星等为[Y]。"),
]

DOMAINS = ["GPE", "Event", "Person", "Science", "Product", "Creature",
           "Building", "Artworks", "Medicine", "Transport", "Astronomy",
           "Organization"]


def types(spec):
    return sorted({T[t] for t in spec.split()})


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    en_labels = [r[1] for r in RELATIONS]
    zh_labels = [r[2] for r in RELATIONS]
    pids = [r[0] for r in RELATIONS]
    for name, values in (("pid", pids), ("en", en_labels), ("zh", zh_labels)):
        dupes = {v for v in values if values.count(v) > 1}
        assert not dupes, f"duplicate {name}: {dupes}"
    n = len(RELATIONS)

    mappers = []
    for domain in DOMAINS:
        rels = []
        for pid, en, zh, head, tail, doms, _, _ in RELATIONS:
            if domain in doms.split():
                rels.append({"pid": pid, "label": {"zh": zh, "en": en},
                             "head_types": types(head), "tail_types": types(tail)})
        assert rels, domain
        mappers.append({"domain": domain, "relations": rels})
    for _, _, _, _, _, doms, _, _ in RELATIONS:
        for d in doms.split():
            assert d in DOMAINS, d

    config = root / "config"
    config.mkdir(exist_ok=True)
    out = {"declared_domain_count": len(DOMAINS), "declared_relation_count": n,
           "mappers": mappers}
    (config / "mappers.json").write_text(
        json.dumps(out, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")

    en_t, zh_t = {}, {}
    for _, en, zh, _, _, _, en_s, zh_s in RELATIONS:
        en_t[en] = [en_s, f"The {en} of [X] is [Y].", f"[Y] is the {en} of [X]."]
        zh_t[zh] = [zh_s, f"[X]的{zh}是[Y]。", f"[Y]是[X]的{zh}。"]
    for lang, t in (("en", en_t), ("zh", zh_t)):
        doc = {"lang": lang, "declared_relation_count": n, "templates": t}
        (config / f"templates.{lang}.json").write_text(
            json.dumps(doc, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
    with open(config / "properties.jsonl", "w", encoding="utf-8") as f:
        for pid, en, zh, *_ in sorted(RELATIONS, key=lambda r: int(r[0][1:])):
            f.write(json.dumps({"pid": pid, "labels": {"en": en, "zh": zh}},
                               ensure_ascii=False) + "\n")
    print(f"{len(DOMAINS)} domains, {n} relations")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
# Copyright 2026 The lexsimp Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes small pages-meta-history excerpts in the MediaWiki export schema.

The pages are short encyclopedia-style stubs with markup (infoboxes,
references, links, categories, headings) and revision histories mixing
simplifications, spelling fixes, category edits, vandalism with reverts and
markup-only changes.

    python3 make_wiki_sample.py simple 50 simplewiki_sample.xml
    python3 make_wiki_sample.py complex 30 complexwiki_sample.xml
"""

import hashlib
import random
import sys
from xml.sax.saxutils import escape

TOPICS = [
    ("Amazon River", "river", "South America", "rainforest"),
    ("Basalt", "rock", "volcanic regions", "lava flows"),
    ("Ganges", "river", "India", "plains"),
    ("Sahara", "desert", "North Africa", "sand dunes"),
    ("Mount Kilimanjaro", "mountain", "Tanzania", "glaciers"),
    ("Lake Baikal", "lake", "Siberia", "seals"),
    ("Great Barrier Reef", "reef", "Australia", "corals"),
    ("Danube", "river", "Central Europe", "ports"),
    ("Andes", "mountain range", "South America", "peaks"),
    ("Gobi Desert", "desert", "Mongolia", "fossils"),
    ("Nile", "river", "Africa", "delta"),
    ("Iceland", "island", "the North Atlantic", "geysers"),
    ("Madagascar", "island", "the Indian Ocean", "lemurs"),
    ("Yellowstone", "national park", "the United States", "hot springs"),
    ("Black Forest", "forest", "Germany", "clocks"),
    ("Mekong", "river", "Southeast Asia", "fisheries"),
    ("Atacama Desert", "desert", "Chile", "observatories"),
    ("Lake Victoria", "lake", "East Africa", "fishing villages"),
    ("Rhine", "river", "Western Europe", "castles"),
    ("Himalayas", "mountain range", "Asia", "monasteries"),
    ("Galapagos Islands", "archipelago", "the Pacific Ocean", "tortoises"),
    ("Serengeti", "plain", "Tanzania", "migrations"),
    ("Dead Sea", "lake", "the Middle East", "salt"),
    ("Niagara Falls", "waterfall", "North America", "tourism"),
    ("Loch Ness", "lake", "Scotland", "legends"),
    ("Mississippi River", "river", "the United States", "barges"),
    ("Alps", "mountain range", "Europe", "ski resorts"),
    ("Borneo", "island", "Southeast Asia", "orangutans"),
    ("Patagonia", "region", "South America", "sheep farms"),
    ("Volga", "river", "Russia", "dams"),
    ("Mount Fuji", "volcano", "Japan", "pilgrims"),
    ("Tasmania", "island", "Australia", "devils"),
    ("Everglades", "wetland", "Florida", "alligators"),
    ("Crete", "island", "the Mediterranean Sea", "olive groves"),
    ("Kalahari", "desert", "Southern Africa", "meerkats"),
    ("Zambezi", "river", "Southern Africa", "waterfalls"),
    ("Ural Mountains", "mountain range", "Russia", "minerals"),
    ("Lake Titicaca", "lake", "the Andes", "reed boats"),
    ("Sicily", "island", "Italy", "citrus farms"),
    ("Yangtze", "river", "China", "gorges"),
    ("Arctic Ocean", "ocean", "the far north", "sea ice"),
    ("Pyrenees", "mountain range", "Spain and France", "shepherds"),
    ("Mojave Desert", "desert", "California", "Joshua trees"),
    ("Sumatra", "island", "Indonesia", "tigers"),
    ("Thames", "river", "England", "bridges"),
    ("Caucasus", "mountain range", "Eurasia", "villages"),
    ("Lake Tanganyika", "lake", "Central Africa", "cichlids"),
    ("Cappadocia", "region", "Turkey", "cave dwellings"),
    ("Okavango Delta", "delta", "Botswana", "elephants"),
    ("Fiordland", "national park", "New Zealand", "fjords"),
    ("Danakil Depression", "basin", "Ethiopia", "salt flats"),
    ("Mont Blanc", "mountain", "the Alps", "climbers"),
]

# Replacements applied by editors who simplify wording.
SIMPLIFICATIONS = [
    ("approximately", "about"),
    ("numerous", "many"),
    ("inhabitants", "people"),
    ("constructed", "built"),
    ("annually", "every year"),
    ("indigenous", "native"),
    ("commenced", "started"),
    ("assist", "help"),
    ("sufficient", "enough"),
    ("purchased", "bought"),
    ("resides", "lives"),
    ("utilized", "used"),
]

# Spelling errors and their corrections.
FIXES = [
    ("recieve", "receive"),
    ("occured", "occurred"),
    ("seperate", "separate"),
    ("begining", "beginning"),
    ("enviroment", "environment"),
    ("goverment", "government"),
]

SIMPLIFY_COMMENTS = ["simplified wording", "Simplify language", "simpler words",
                     "/* History */ simplified", "more simple english"]
UNTRUSTED_REWORD_COMMENTS = ["copyedit", "reworded", "clearer", None]
FIX_COMMENTS = ["typo", "fix spelling", "spelling", "sp"]
OTHER_COMMENTS = ["+cat", "added category", "/* Geography */ expand", None]

USERS = ["Griffinofwales", "Peterdownunder", "Kansan", "Creol", "Osiris", "Barras",
         "Lauryn", "Gwib", "Eptalon", "Fr33kman", "Macdonald-ross", "Auntof6"]


def sentences_for(topic, rng):
    name, kind, place, feature = topic
    pool = [
        f"'''{name}''' is a [[{kind}]] in [[{place}]].",
        f"It is approximately {rng.randint(2, 90) * 100} kilometres long.",
        f"Numerous [[{feature}]] can be found there.",
        f"The indigenous inhabitants recieve visitors from many countries.",
        f"A railway was constructed near the {kind} in {rng.randint(1850, 1990)}.",
        f"A festival is held annually in the largest town.",
        f"Research on the {kind} commenced in the begining of the last century.",
        f"The local goverment tries to assist farmers and protect the enviroment.",
        f"There is sufficient water for the {feature} during most of the year.",
        f"The land was purchased by the state after a flood occured.",
        f"A seperate museum describes the history of the {feature}.<ref>{{{{cite web|title={name}|url=http://example.org/{name.replace(' ', '_')}}}}}</ref>",
        f"Most of the population resides in small villages.",
        f"Boats were utilized to carry goods to [[{place}]].",
    ]
    head = pool[0]
    body = rng.sample(pool[1:], rng.randint(4, 7))
    return [head] + body


def render(name, kind, sentences, categories, extra_markup):
    infobox = "{{Infobox " + kind + "\n| name = " + name + "\n| image = " + \
        name.replace(" ", "_") + ".jpg\n}}\n"
    parts = [infobox, sentences[0], " ".join(sentences[1:3]), "",
             "== Geography ==", " ".join(sentences[3:]), ""]
    if extra_markup:
        parts.append("<!-- please keep this section short -->")
    parts.append("== References ==")
    parts.append("{{reflist}}")
    parts.append("")
    parts.extend(f"[[Category:{c}]]" for c in categories)
    return "\n".join(parts)


def apply_first(sentences, pairs, rng):
    """Replaces one word pair that occurs in the sentences; None if none does."""
    options = []
    for i, s in enumerate(sentences):
        for old, new in pairs:
            for variant_old, variant_new in ((old, new), (old.capitalize(), new.capitalize())):
                if f" {variant_old} " in f" {s} " or s.startswith(variant_old + " "):
                    options.append((i, variant_old, variant_new))
    if not options:
        return None
    i, old, new = rng.choice(options)
    updated = list(sentences)
    updated[i] = updated[i].replace(old, new, 1)
    return updated


def sha1_base36(text):
    n = int(hashlib.sha1(text.encode("utf-8")).hexdigest(), 16)
    digits = "0123456789abcdefghijklmnopqrstuvwxyz"
    out = ""
    while n:
        n, r = divmod(n, 36)
        out = digits[r] + out
    return out.rjust(31, "0")


def page_history(topic, corpus, rng):
    name, kind, _, _ = topic
    sentences = sentences_for(topic, rng)
    categories = [kind.capitalize() + "s"]
    markup = False
    history = [(sentences, list(categories), markup, "New page: " + name)]
    steps = rng.randint(2, 6)
    for _ in range(steps):
        roll = rng.random()
        if corpus == "simple" and roll < 0.45:
            updated = apply_first(sentences, SIMPLIFICATIONS, rng)
            if updated is None:
                continue
            sentences = updated
            comment = rng.choice(SIMPLIFY_COMMENTS if rng.random() < 0.7
                                 else UNTRUSTED_REWORD_COMMENTS)
        elif roll < 0.7:
            updated = apply_first(sentences, FIXES, rng)
            if updated is None:
                continue
            sentences = updated
            comment = rng.choice(FIX_COMMENTS)
        elif roll < 0.8:
            categories = categories + [rng.choice(["Geography", "Nature", "Tourism"])]
            comment = rng.choice(OTHER_COMMENTS[:2])
        elif roll < 0.9:
            markup = not markup
            comment = None
        else:
            vandal = list(sentences)
            vandal[1] = "lol this page is stupid"
            history.append((vandal, list(categories), markup, None))
            comment = "Reverted edits by 203.0.113.7 to last version"
        history.append((sentences, list(categories), markup, comment))
    return history


def write_page(out, page_id, rev_id, topic, corpus, rng):
    name, kind, _, _ = topic
    out.write("  <page>\n")
    out.write(f"    <title>{escape(name)}</title>\n")
    out.write("    <ns>0</ns>\n")
    out.write(f"    <id>{page_id}</id>\n")
    parent = None
    day = rng.randint(1, 200)
    for sentences, categories, markup, comment in page_history(topic, corpus, rng):
        rev_id += rng.randint(1, 40)
        day += rng.randint(1, 30)
        text = render(name, kind, sentences, categories, markup)
        year = 2008 + day // 360
        month = 1 + (day % 360) // 30
        dom = 1 + day % 28
        out.write("    <revision>\n")
        out.write(f"      <id>{rev_id}</id>\n")
        if parent is not None:
            out.write(f"      <parentid>{parent}</parentid>\n")
        out.write(f"      <timestamp>{year:04d}-{month:02d}-{dom:02d}T"
                  f"{rng.randint(0, 23):02d}:{rng.randint(0, 59):02d}:00Z</timestamp>\n")
        out.write("      <contributor>\n")
        if comment is None and rng.random() < 0.3:
            out.write("        <ip>203.0.113.7</ip>\n")
        else:
            out.write(f"        <username>{rng.choice(USERS)}</username>\n")
            out.write(f"        <id>{rng.randint(1000, 99999)}</id>\n")
        out.write("      </contributor>\n")
        if comment is not None and comment.startswith(("typo", "sp")):
            out.write("      <minor />\n")
        if comment is not None:
            out.write(f"      <comment>{escape(comment)}</comment>\n")
        out.write("      <model>wikitext</model>\n")
        out.write("      <format>text/x-wiki</format>\n")
        size = len(text.encode("utf-8"))
        out.write(f'      <text bytes="{size}" xml:space="preserve">{escape(text)}</text>\n')
        out.write(f"      <sha1>{sha1_base36(text)}</sha1>\n")
        out.write("    </revision>\n")
        parent = rev_id
    out.write("  </page>\n")
    return rev_id


def main():
    corpus, count, path = sys.argv[1], int(sys.argv[2]), sys.argv[3]
    rng = random.Random(20090101 if corpus == "simple" else 20080101)
    site = "Wikipedia" if corpus == "complex" else "Simple English Wikipedia"
    dbname = "enwiki" if corpus == "complex" else "simplewiki"
    host = "en" if corpus == "complex" else "simple"
    with open(path, "w", encoding="utf-8") as out:
        out.write('<mediawiki xmlns="http://www.mediawiki.org/xml/export-0.10/" '
                  'xmlns:xsi="http://www.w3.org/2001/XMLSchema-instance" '
                  'xsi:schemaLocation="http://www.mediawiki.org/xml/export-0.10/ '
                  'http://www.mediawiki.org/xml/export-0.10.xsd" version="0.10" '
                  'xml:lang="en">\n')
        out.write("  <siteinfo>\n")
        out.write(f"    <sitename>{site}</sitename>\n")
        out.write(f"    <dbname>{dbname}</dbname>\n")
        out.write(f"    <base>https://{host}.wikipedia.org/wiki/Main_Page</base>\n")
        out.write("    <generator>MediaWiki 1.16alpha</generator>\n")
        out.write("    <case>first-letter</case>\n")
        out.write("    <namespaces>\n")
        out.write('      <namespace key="0" case="first-letter" />\n')
        out.write('      <namespace key="14" case="first-letter">Category</namespace>\n')
        out.write("    </namespaces>\n")
        out.write("  </siteinfo>\n")
        rev_id = 100000 if corpus == "simple" else 5000000
        topics = TOPICS[:count] if count <= len(TOPICS) else TOPICS
        for page_id, topic in enumerate(topics, start=1):
            rev_id = write_page(out, 1000 + page_id, rev_id, topic, corpus, rng)
        out.write("</mediawiki>\n")


if __name__ == "__main__":
    main()

import fnmatch
import jinja2
import json
import os
import sys

TEMPLATES_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)),
                             "templates")

# Template sources keyed by file name without the .in suffix.
TEMPLATES = {}


def red(msg):
    return "\033[41m\033[1;30m %s \033[0m" % str(msg)


def lightred(msg):
    return "\033[1;31m%s\033[0m" % str(msg)


def yellow(msg):
    return "\033[43m\033[1;30m %s \033[0m" % str(msg)


def green(msg):
    return "\033[42m\033[1;30m %s \033[0m" % str(msg)


def blue(msg):
    return "\033[46m\033[1;30m %s \033[0m" % str(msg)


def status(msg, colour=None, stream=None):
    '''Write a human-facing status line to stderr, coloured on a tty.'''
    stream = stream or sys.stderr
    if colour is not None and stream.isatty():
        msg = colour(msg)
    print(msg, file=stream)


def read_json(path):
    with open(path, "r") as fh:
        return json.loads(fh.read())


def dumps_json(data):
    '''Deterministic JSON text: sorted keys, fixed separators, newline.'''
    return json.dumps(data, sort_keys=True, indent=1,
                      separators=(",", ": ")) + "\n"


def write_json(data, path=None):
    content = dumps_json(data)
    if path is None:
        sys.stdout.write(content)
        return
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    with open(path, "w") as fh:
        fh.write(content)


def popcount(bits):
    return bin(bits).count("1")


def iter_bits(bits):
    '''Yield the indices of the set bits of a non-negative integer.'''
    for index, digit in enumerate(reversed(bin(bits)[2:])):
        if digit == "1":
            yield index


def setup_templates(templates_path=TEMPLATES_DIR):
    templates = (f for f in os.listdir(templates_path)
                 if fnmatch.fnmatch(f, "*.in"))
    for template in templates:
        template_name = template.split(".", 1)[0]
        with open(os.path.join(templates_path, template), "r") as fh:
            TEMPLATES[template_name] = fh.read().replace("\\\n", "")


def render(template_name, **context):
    if not TEMPLATES:
        setup_templates()
    return jinja2.Template(TEMPLATES[template_name],
                           keep_trailing_newline=True).render(**context)

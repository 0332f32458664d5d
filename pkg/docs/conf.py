# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# For the full list of options see
# http://www.sphinx-doc.org/en/master/config

import os
import sys
import datetime

import sphinx_bootstrap_theme

now = datetime.datetime.now()
sys.path.insert(0, os.path.abspath('..'))

# -- Project information -----------------------------------------------------

project = 'saltbox-roof'
author = 'saltbox-roof developers'
copyright = '{}, {}'.format(now.year, author)
# version and release come from setuptools_scm at build time
release = ''
version = ''

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.imgmath',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
    'sphinxcontrib.fulltoc',
    'sphinx.ext.napoleon',
    'sphinx_click.ext'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = ['_build']
pygments_style = None
toc_object_entries_show_parents = 'hide'

# -- Options for HTML output -------------------------------------------------

html_theme = 'bootstrap'
html_theme_path = sphinx_bootstrap_theme.get_html_theme_path()
html_theme_options = {
    'navbar_class': "navbar navbar-inverse",
    'navbar_fixed_top': "true",
    'navbar_pagenav': True,
    'source_link_position': "nav",
    'bootswatch_theme': "united",
    'bootstrap_version': "3",
}
html_sidebars = {
    '**': ['localtoc.html']
}
htmlhelp_basename = 'saltboxroofdoc'

# -- Options for other outputs -----------------------------------------------

latex_documents = [
    (master_doc, 'saltbox-roof.tex', 'saltbox-roof Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'saltbox-roof', 'saltbox-roof Documentation', [author], 1)
]
texinfo_documents = [
    (master_doc, 'saltbox-roof', 'saltbox-roof Documentation', author,
     'saltbox-roof', 'Saltbox-Roof distribution library and command line interface.',
     'Miscellaneous'),
]
epub_title = project
epub_exclude_files = ['search.html']

# -- Extension configuration -------------------------------------------------

autodoc_default_options = {
    'inherited-members': True,
}
autodoc_member_order = 'groupwise'

# -- CLI documentation -------------------------------------------------------
"""Write the reST page of the saltbox-roof commands.

All commands belong to the single click group saltbox_roof.cli:main so one
sphinx-click directive documents the whole command line interface.
"""
# set to True to rewrite docs/cli/commands.rst on every build
cli_overwrite = False


def create_cli_file(group='main', tool_name='saltbox-roof', lib_name='saltbox_roof'):
    """Create docs/cli/commands.rst with a sphinx-click directive for a group."""
    doc_folder = os.path.join(os.path.dirname(__file__), 'cli')
    if not os.path.isdir(doc_folder):
        os.mkdir(doc_folder)
    rst_path = os.path.join(doc_folder, 'commands.rst')
    if os.path.isfile(rst_path) and not cli_overwrite:
        print("[CLI]: No new CLI files created.")
        return
    cli_content = [
        "Commands\n",
        "========\n",
        "\n",
        ".. click:: {}.cli:{}\n".format(lib_name, group),
        "   :prog: {}\n".format(tool_name),
        "   :nested: full\n"
    ]
    with open(rst_path, 'w') as group_file:
        group_file.writelines(cli_content)


create_cli_file()

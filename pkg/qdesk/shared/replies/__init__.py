from .reply import Reply
from .jsonreply import JsonReply
from .csvreply import CsvReply
from .textreply import TextReply
